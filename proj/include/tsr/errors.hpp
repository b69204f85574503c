#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsr {

// Error classes map one-to-one onto CLI exit statuses.
enum class errc : int {
    parse = 2,      // malformed files, literals, flags
    validation = 3, // well-formed but invalid input (non-closed, non-injective, ...)
    domain = 4,     // legal objects outside an operation's domain
    cap = 5,        // enumeration cap exceeded
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }
    int exit_status() const { return static_cast<int>(kind_); }

private:
    errc kind_;
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(errc::parse, what) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& what) : error(errc::validation, what) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& what) : error(errc::domain, what) {}
};

struct cap_error : error {
    explicit cap_error(std::uint64_t cap)
        : error(errc::cap, "EnumerationCapExceeded: more than " + std::to_string(cap) +
                               " orders; raise --cap or shrink the instance"),
          cap_value(cap) {}
    std::uint64_t cap_value;
};

} // namespace tsr
