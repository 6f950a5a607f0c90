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

#include <chrono>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "isl/matrix.hpp"
#include "isl/version.hpp"

namespace isl {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a content digest, rendered as 16 hex digits.
inline std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// Machine-readable result envelope. Key order is fixed; `timing_ms` is
/// always appended last so two reports on the same input can be compared
/// byte-for-byte after dropping the final key.
class ReportBuilder {
  public:
    ReportBuilder(const std::string& tool, const std::string& input_name,
                  const std::string& input_text)
        : start_(std::chrono::steady_clock::now()) {
        j_["schema"] = kReportSchema;
        j_["tool"] = tool;
        j_["version"] = kVersion;
        j_["input"] = Json{{"name", input_name}, {"digest", "fnv1a64:" + fnv1a64_hex(input_text)}};
    }

    Json& body() { return j_; }

    Json finish(bool with_timing = true) const {
        Json out = j_;
        if (with_timing) {
            const auto dt = std::chrono::steady_clock::now() - start_;
            out["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        }
        return out;
    }

  private:
    Json j_;
    std::chrono::steady_clock::time_point start_;
};

inline Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace isl
