#pragma once

#include <cstdio>
#include <cstdlib>

// Precondition checks for indexing contracts. A violation is a programming
// error, not a recoverable condition, so it aborts in every build type.
#define TLRQ_EXPECTS(cond)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::fprintf(stderr, "%s:%d: contract violated: %s\n", __FILE__,    \
                         __LINE__, #cond);                                      \
            std::abort();                                                       \
        }                                                                       \
    } while (false)
