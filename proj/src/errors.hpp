#pragma once

#include <stdexcept>

namespace rdut {

/// The budget constraint cannot be met by any non-negative outcome
/// (x0 <= 0; x0 == 0 is the degenerate all-zero case).
class infeasible_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The multiplier equation has no root in the search range, or the budget
/// integral diverges at every probe.
class ill_posed_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid configuration input; the message carries the
/// offending field or the parser's position diagnostics.
class config_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rdut
