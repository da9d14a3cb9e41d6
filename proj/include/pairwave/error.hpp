#pragma once

#include <stdexcept>
#include <string>

namespace pairwave {

enum class errc {
    domain,       // argument outside the operation's domain
    accuracy,     // result could not be certified to the requested accuracy
    singularity,  // evaluation at or too near a pole
    stiffness,    // ODE step-size collapse
    region,       // point outside (or too close to the edge of) the valid region
    infeasible,   // no physical solution exists for the given model
    solver,       // iteration did not converge
    data,         // malformed input data
    config,       // invalid run configuration
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::domain: return "domain";
    case errc::accuracy: return "accuracy";
    case errc::singularity: return "singularity";
    case errc::stiffness: return "stiffness";
    case errc::region: return "region";
    case errc::infeasible: return "infeasible";
    case errc::solver: return "solver";
    case errc::data: return "data";
    case errc::config: return "config";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + " error: " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace pairwave
