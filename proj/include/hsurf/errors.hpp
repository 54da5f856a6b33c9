#ifndef HSURF_ERRORS_HPP
#define HSURF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsurf {

/// Recoverable input or math-domain error. The CLI maps these to exit code 1.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem-backed internal assertion failed; indicates a bug in this
/// library, not bad input. The CLI maps these to exit code 2.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class non_integer_milnor : public error {
public:
    using error::error;
};

class not_stabilized : public error {
public:
    explicit not_stabilized(int degree_cap)
        : error("jet oracle did not stabilize by degree cap " + std::to_string(degree_cap) +
                "; the germ may have a non-isolated singularity, or raise the cap"),
          degree_cap_(degree_cap) {}
    int degree_cap() const { return degree_cap_; }

private:
    int degree_cap_;
};

class empty_jacobian : public error {
public:
    empty_jacobian() : error("germ has an identically zero Jacobian") {}
};

class cross_check_mismatch : public error {
public:
    cross_check_mismatch(const std::string& a, const std::string& b)
        : error("Milnor number cross-check mismatch: closed form gives " + a +
                ", jet oracle gives " + b) {}
};

class non_symmetric : public error {
public:
    non_symmetric() : error("quadric matrix is not symmetric") {}
};

class rank_out_of_range : public error {
public:
    explicit rank_out_of_range(int rank)
        : error("quadric rank " + std::to_string(rank) +
                " is outside the supported range 4 <= q <= n+1 (or full rank for the smooth case)"),
          rank_(rank) {}
    int rank() const { return rank_; }

private:
    int rank_;
};

class missing_top_stratum : public error {
public:
    missing_top_stratum() : error("no stratum of top dimension s in the profile") {}
};

class negative_betti : public error {
public:
    using error::error;
};

class missing_chi : public error {
public:
    missing_chi() : error("chi_override is required for this computation") {}
};

class inconsistent_chi : public error {
public:
    using error::error;
};

class bad_table : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

}  // namespace hsurf

#endif
