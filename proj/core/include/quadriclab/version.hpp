#ifndef QUADRICLAB_VERSION_HPP
#define QUADRICLAB_VERSION_HPP

namespace qlab {

inline constexpr const char* version = "0.1.0";

} // namespace qlab

#endif
