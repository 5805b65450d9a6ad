#pragma once

#include <stdexcept>
#include <string>

namespace tww {

// Malformed data: out-of-range indices, overlapping partitions, bad file syntax.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};

// Valid data, invalid argument for the operation (e.g. k = 0 for graph powers).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& m) : std::invalid_argument(m) {}
};

// A certificate failed to replay; `step` is the 0-based index of the offending merge.
struct CertificateError : std::runtime_error {
    CertificateError(const std::string& m, int step_index)
        : std::runtime_error(m + " (step " + std::to_string(step_index) + ")"), step(step_index) {}
    int step;
};

// A group oracle violated a group axiom on a sampled instance.
struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& m) : std::runtime_error(m) {}
};

// An operation refused to start because its cost estimate exceeds the
// configured budget (distinct from a solver running out of nodes mid-search).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace tww
