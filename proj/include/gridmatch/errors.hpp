#pragma once

#include <stdexcept>

namespace gridmatch {

/// A configured size cap (faces or boundary-matrix dimensions) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gridmatch
