#pragma once

#include <stdexcept>
#include <string>

namespace dgs {

/// Input could not be parsed; message carries a line number where known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// The degree sequence admits no simple digraph realization.
class not_digraphic_error : public std::runtime_error {
public:
    explicit not_digraphic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration refused: instance above the configured cap.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

/// A vertex attaches to the 3-cycle with a pattern outside the four classes.
class mixed_attachment_error : public std::runtime_error {
public:
    mixed_attachment_error(int vertex, const std::string& what)
        : std::runtime_error(what), vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

/// The anchor scan hit a slack window whose degree multiplicity is not 3.
/// Surfaced loudly instead of guessing which coordinates form the triple.
class anchor_diagnostic_error : public std::runtime_error {
public:
    explicit anchor_diagnostic_error(const std::string& what) : std::runtime_error(what) {}
};

/// A detected anchor triple failed to induce a 3-cycle in a realization.
/// Indicates a detector bug; never expected on valid inputs.
class anchor_assertion_error : public std::runtime_error {
public:
    explicit anchor_assertion_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dgs
