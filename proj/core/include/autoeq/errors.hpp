#pragma once

#include <stdexcept>
#include <string>

namespace autoeq {

/// Argument outside the domain of a model primitive (singular supply curve,
/// subsistence violation, degenerate derivative).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bisection bracket whose endpoints do not straddle the predicate change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration error. `line` is 0 for errors not tied to a single line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string key, int line, const std::string& what)
        : std::runtime_error(format(key, line, what)), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& key, int line, const std::string& what) {
        std::string msg = "config";
        if (line > 0) msg += " line " + std::to_string(line);
        if (!key.empty()) msg += " key '" + key + "'";
        return msg + ": " + what;
    }

    std::string key_;
    int line_;
};

}  // namespace autoeq
