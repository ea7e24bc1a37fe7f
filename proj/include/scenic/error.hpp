#ifndef SCENIC_ERROR_HPP
#define SCENIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace scenic {

enum class errc {
    not_monic,
    not_squarefree,
    degree_too_small,
    degree_too_large,
    degree_mismatch,
    degree_invalid,
    retry_limit_exceeded,
    k_max_exceeded,
    no_convergence,
    real_root_detected,
    ill_conditioned,
    quasi_reflection_present,
    parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace scenic

#endif
