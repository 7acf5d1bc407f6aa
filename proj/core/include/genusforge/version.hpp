#ifndef GENUSFORGE_VERSION_HPP
#define GENUSFORGE_VERSION_HPP

namespace genusforge {

inline constexpr const char* kToolVersion = "0.1.0";

}

#endif
