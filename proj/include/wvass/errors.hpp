// Copyright (c) wvass contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wvass {

/// Thrown when an operation is asked to run on a model class it does not
/// support (e.g. termination checking on a model with guarded counters).
struct UnsupportedModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a node or size cap is exhausted before an operation finished.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wvass
