#ifndef FANOSLOPE_ERRORS_HPP
#define FANOSLOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanoslope {

/// Malformed or inconsistent input data: bad rationals, rank mismatches,
/// unknown fields, invalid models, violated preconditions.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A recorded expected value or an internal dual-route identity failed to
/// hold. Distinct from DataError so callers can map it to a different
/// exit code.
class MismatchError : public std::runtime_error {
public:
    explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fanoslope

#endif
