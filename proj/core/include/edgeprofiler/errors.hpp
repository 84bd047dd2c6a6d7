#pragma once

#include <stdexcept>
#include <string>

namespace edgeprofiler {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent user configuration (bad field value, schema
// violation, malformed file). CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// A preset name that is not in the catalog. CLI exit code 3.
struct UnknownPresetError : Error {
    using Error::Error;
};

// Integer/rational arithmetic left the representable range. Counting
// formulas never wrap silently; a config large enough to overflow is
// reported as an error on the input. CLI exit code 2.
struct OverflowError : ConfigError {
    using ConfigError::ConfigError;
};

// A broken internal invariant. Seeing this is a bug. CLI exit code 4.
struct InternalError : Error {
    using Error::Error;
};

} // namespace edgeprofiler
