// Copyright 2026 The qmcforge Authors
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

#include "qmcforge/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace qmcforge {

namespace {

LogLevel from_env() {
    const char* v = std::getenv("QMCFORGE_LOG");
    if (v == nullptr) return LogLevel::Warn;
    const std::string s(v);
    if (s == "error") return LogLevel::Error;
    if (s == "info") return LogLevel::Info;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

std::atomic<int>& level_slot() {
    static std::atomic<int> level{static_cast<int>(from_env())};
    return level;
}

const char* name(LogLevel l) {
    switch (l) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
    }
    return "log";
}

}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_slot().load()); }

void set_log_level(LogLevel level) { level_slot().store(static_cast<int>(level)); }

void log(LogLevel level, std::string_view message) {
    if (static_cast<int>(level) > level_slot().load()) return;
    std::cerr << "[qmcforge " << name(level) << "] " << message << '\n';
}

}  // namespace qmcforge
