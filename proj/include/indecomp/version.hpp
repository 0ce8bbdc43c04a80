#ifndef INDECOMP_VERSION_HPP
#define INDECOMP_VERSION_HPP

namespace indecomp {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
