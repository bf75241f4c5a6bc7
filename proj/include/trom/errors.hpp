#pragma once

#include <stdexcept>
#include <string>

namespace trom {

// Every failure mode callers are expected to handle gets its own type so
// they can catch precisely.  All of them still read as std::runtime_error.

struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& m) : std::runtime_error(m) {}
};

struct DisconnectedRegion : std::runtime_error {
    explicit DisconnectedRegion(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& m) : std::runtime_error(m) {}
};

struct NoCover : std::runtime_error {
    explicit NoCover(const std::string& m) : std::runtime_error(m) {}
};

struct DefectOutside : std::runtime_error {
    explicit DefectOutside(const std::string& m) : std::runtime_error(m) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& m) : std::runtime_error(m) {}
};

struct NotClawFree : std::runtime_error {
    explicit NotClawFree(const std::string& m) : std::runtime_error(m) {}
};

struct NotDetachable : std::runtime_error {
    explicit NotDetachable(const std::string& m) : std::runtime_error(m) {}
};

struct NotATree : std::runtime_error {
    explicit NotATree(const std::string& m) : std::runtime_error(m) {}
};

struct SizeNotDivisible : std::runtime_error {
    explicit SizeNotDivisible(const std::string& m) : std::runtime_error(m) {}
};

} // namespace trom
