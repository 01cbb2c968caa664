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

#include <string>

namespace xbwt {

struct SelftestResult {
    bool passed = true;
    std::string report;  // one line per fixture
};

// Replays the published worked example of every operation (one 16-letter
// word exercises the whole pipeline) and byte-level container fixtures.
// Failures land in the report; nothing throws.
SelftestResult selftest();

}  // namespace xbwt
