#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed scalar literal, matrix literal or document. `position` is a
/// zero-based character offset into the parsed text.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class index_out_of_range : public error {
public:
    using error::error;
};

/// m_exponent(M, i, i) has no meaning.
class diagonal_query : public error {
public:
    using error::error;
};

/// Some m_ij at vertex i is undefined, so s_i does not exist.
class not_reflectable : public error {
public:
    explicit not_reflectable(std::size_t vertex)
        : error("vertex " + std::to_string(vertex + 1) + " is not reflectable"), vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class rank_mismatch : public error {
public:
    using error::error;
};

/// A fixed parameter was assigned a value outside its catalog domain.
class domain_violation : public error {
public:
    using error::error;
};

/// An exponent or integer coordinate left the int64 range.
class arithmetic_overflow : public error {
public:
    explicit arithmetic_overflow(const std::string& what) : error(what + " overflow") {}
};

} // namespace weyl
