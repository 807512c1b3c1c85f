#pragma once

#include <stdexcept>
#include <string>

namespace ngc {

struct MaxOrderExceeded : std::runtime_error {
    explicit MaxOrderExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

struct UnindexedMonomial : std::runtime_error {
    explicit UnindexedMonomial(const std::string& what) : std::runtime_error(what) {}
};

struct NotASubspace : std::runtime_error {
    explicit NotASubspace(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ngc
