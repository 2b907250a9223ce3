#pragma once

#include <stdexcept>
#include <string>

namespace sumgraph {

/// Base of every error raised by the library. `kind()` is the short
/// machine-readable tag the CLI reports.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual auto kind() const -> std::string = 0;
};

#define SUMGRAPH_ERROR(Name, tag)                                              \
    class Name : public Error                                                  \
    {                                                                          \
    public:                                                                    \
        using Error::Error;                                                    \
        auto kind() const -> std::string override { return tag; }              \
    }

SUMGRAPH_ERROR(ValidationError, "validation");
SUMGRAPH_ERROR(DomainError, "domain");
SUMGRAPH_ERROR(ConventionError, "convention");
SUMGRAPH_ERROR(LookupError, "lookup");
SUMGRAPH_ERROR(ResourceError, "resource");
SUMGRAPH_ERROR(CertificateError, "certificate");
SUMGRAPH_ERROR(ForeignEdgeError, "foreign_edge");
SUMGRAPH_ERROR(OverflowError, "overflow");
SUMGRAPH_ERROR(ConsistencyError, "consistency");

#undef SUMGRAPH_ERROR

} // namespace sumgraph
