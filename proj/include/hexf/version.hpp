#ifndef HEXF_VERSION_HPP
#define HEXF_VERSION_HPP

namespace hexf {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
