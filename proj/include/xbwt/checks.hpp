/*
Copyright 2026 the xbwt authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdio>
#include <cstdlib>

// Internal invariant checks. On by default, including optimized builds; the
// checked conditions are O(1) or restricted to small inputs. Define
// XBWT_NO_INVARIANT_CHECKS to compile them out.
#ifndef XBWT_NO_INVARIANT_CHECKS
#define XBWT_CHECK(cond, what)                                              \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::fprintf(stderr, "xbwt invariant violated: %s (%s:%d)\n",   \
                         what, __FILE__, __LINE__);                         \
            std::abort();                                                   \
        }                                                                   \
    } while (0)
#else
#define XBWT_CHECK(cond, what) ((void)0)
#endif
