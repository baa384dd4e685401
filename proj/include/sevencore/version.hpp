#ifndef SEVENCORE_VERSION_HPP
#define SEVENCORE_VERSION_HPP

namespace sevencore
{

inline constexpr const char* version_string = "0.1.0";

} // namespace sevencore

#endif
