#ifndef ACT_VERSION_HPP
#define ACT_VERSION_HPP

#define ACT_VERSION "0.1.0"

#endif
