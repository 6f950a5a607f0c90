/*
   Copyright 2026 The isl authors

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

#include <stdexcept>
#include <string>

namespace isl {

/// Invalid input or violated precondition. The caller handed us something we
/// cannot (or refuse to) work with; the message names the offending datum.
class ValueError : public std::runtime_error {
public:
    explicit ValueError(const std::string& what) : std::runtime_error(what) {}
};

/// A result failed its own post-hoc consistency check. This is never the
/// caller's fault: either the implementation is wrong or the input silently
/// violated an assumption that only became visible downstream.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

/// A search hit the configured degree cap before completing. Raising the cap
/// (ISL_DEGREE_CAP or the per-call parameter) may let it finish.
class DegreeCapExceeded : public ValueError {
public:
    explicit DegreeCapExceeded(const std::string& what) : ValueError(what) {}
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ValueError(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw InternalError(message);
}

}  // namespace detail

}  // namespace isl
