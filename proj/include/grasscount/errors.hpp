#pragma once

#include <stdexcept>
#include <string>

namespace grasscount {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input matrix does not have the rank the operation requires.
struct rank_error : error {
    explicit rank_error(const std::string& what) : error(what) {}
};

/// An exact computation would exceed the configured enumeration budget.
struct capacity_error : error {
    explicit capacity_error(const std::string& what) : error(what) {}
};

/// Parameters violate a precondition (ranges, shapes, primitivity).
struct argument_error : error {
    explicit argument_error(const std::string& what) : error(what) {}
};

/// A real-valued formula was evaluated outside its domain.
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A series was requested at a point where it diverges.
struct divergence_error : error {
    explicit divergence_error(const std::string& what) : error(what) {}
};

}  // namespace grasscount
