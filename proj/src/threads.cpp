// Copyright 2026 The qborn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qborn/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qborn {

int max_threads() {
    static const int cached = [] {
        int hw = 1;
#ifdef _OPENMP
        hw = omp_get_max_threads();
#endif
        const char* env = std::getenv("QBORN_THREADS");
        if (env == nullptr) {
            return hw;
        }
        try {
            const int requested = std::stoi(env);
            if (requested > 0) {
                return requested;
            }
        } catch (...) {
            // Unparseable values fall through to "auto".
        }
        return hw;
    }();
    return cached;
}

}  // namespace qborn
