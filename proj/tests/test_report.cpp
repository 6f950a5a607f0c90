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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "isl/report.hpp"

using namespace isl;

TEST_CASE("content digest matches the published fnv-1a test vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("reports carry a fixed envelope in a fixed key order") {
    ReportBuilder rb("classify", "sample.sys", "vars x\nfield X = x*d(x)\n");
    rb.body()["result"] = "ok";
    rb.body()["details"] = Json{{"count", 3}};
    const Json out = rb.finish();

    std::vector<std::string> keys;
    for (auto it = out.begin(); it != out.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "tool", "version", "input", "result",
                                           "details", "timing_ms"});
    CHECK(out["schema"] == kReportSchema);
    CHECK(out["tool"] == "classify");
    CHECK(out["version"] == kVersion);
    CHECK(out["input"]["name"] == "sample.sys");

    const std::string digest = out["input"]["digest"].get<std::string>();
    CHECK(digest.rfind("fnv1a64:", 0) == 0);
    CHECK(digest.size() == 8 + 16);
    CHECK(digest.substr(8) == fnv1a64_hex("vars x\nfield X = x*d(x)\n"));
    CHECK(out["timing_ms"].is_number_integer());
}

TEST_CASE("reports without timing are byte-comparable") {
    auto make = [] {
        ReportBuilder rb("resonance", "in.sys", "same input text");
        rb.body()["basis"] = Json::array({"x1*x2"});
        return rb.finish(false).dump(2);
    };
    const std::string a = make();
    const std::string b = make();
    CHECK(a == b);
    CHECK(a.find("timing_ms") == std::string::npos);
}

TEST_CASE("exact values serialize as canonical rational strings") {
    QMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(-3);
    m(1, 0) = Rational(0);
    m(1, 1) = Rational(7, 3);
    CHECK(to_json(m).dump() == R"([["1/2","-3"],["0","7/3"]])");

    const std::vector<Rational> v = {Rational(2, 4), Rational(-6, 3)};
    CHECK(to_json(v).dump() == R"(["1/2","-2"])");
}
