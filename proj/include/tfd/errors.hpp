#pragma once
#include <stdexcept>
#include <string>

namespace tfd {

// Error carrying a short machine-readable code (e.g. "not-a-wall").
class TfdError : public std::runtime_error {
public:
    TfdError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace tfd
