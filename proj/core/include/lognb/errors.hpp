// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace lognb {

/// Base class of everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (out-of-range sizes, bad fractions,
/// unusable model files).
struct config_error : error {
    using error::error;
};

/// Filesystem or stream failure; the message names the file and, where
/// known, the position.
struct io_error : error {
    using error::error;
};

/// The training set cannot produce a usable model (all examples in one
/// class, so the priors would make every prediction constant).
struct degenerate_training_error : error {
    using error::error;
};

}  // namespace lognb
