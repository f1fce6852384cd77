#pragma once

#include <stdexcept>
#include <string>

namespace rap {

/** Base class for all errors raised by this library. */
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Malformed input data: out-of-range indices, duplicate ids, impossible
 *  counts.  Distinct from a validation failure, which is a well-formed
 *  lattice breaking a combinatorial rule. */
struct structural_error : error {
    explicit structural_error(const std::string& msg) : error(msg) {}
};

/** Bad arguments to an operation: unknown names, parameters outside the
 *  operation's domain. */
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/** File format violations encountered while parsing. */
struct io_error : error {
    explicit io_error(const std::string& msg) : error(msg) {}
};

/** Raised when orthogonal doubling collapses two vertices onto the same
 *  facet set.  A realizable right-angled input can never do this, so the
 *  error doubles as a non-realizability certificate. */
struct gluing_error : error {
    explicit gluing_error(const std::string& msg) : error(msg) {}
};

} // namespace rap
