#pragma once

#include <stdexcept>
#include <string>

namespace atbgeo {

struct invalid_spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degenerate_plane_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct non_rectangular_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct wrong_frame_error : std::logic_error {
    using std::logic_error::logic_error;
};

// CSV-level problems carry enough context to point at the offending cell.
struct table_error : std::runtime_error {
    std::string row_id;  // empty when the error is not row-addressed
    table_error(const std::string& msg, std::string row = {})
        : std::runtime_error(msg), row_id(std::move(row)) {}
};

}  // namespace atbgeo
