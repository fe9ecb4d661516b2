// SPDX-License-Identifier: Apache-2.0
//
// janus-holo: tensor impedance holographic antenna synthesis and analysis
// Copyright (C) 2026 The janus-holo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "jha/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace jha::log {

namespace {

std::mutex sink_mutex;

Sink &current()
{
    static Sink sink = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
    return sink;
}

} // namespace

Sink set_warning_sink(Sink sink)
{
    std::lock_guard lock(sink_mutex);
    return std::exchange(current(), std::move(sink));
}

void warn(std::string_view message)
{
    std::lock_guard lock(sink_mutex);
    if (current())
        current()(message);
}

} // namespace jha::log
