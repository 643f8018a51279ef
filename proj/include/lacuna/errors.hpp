#pragma once

#include <stdexcept>
#include <string>

namespace lacuna {

// Bracket endpoints evaluate to the same sign: root-finding cannot start.
class no_sign_change_error : public std::runtime_error {
public:
    explicit no_sign_change_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration cap reached before the bracket shrank to tolerance.
class non_convergence_error : public std::runtime_error {
public:
    explicit non_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested accuracy sits below the cancellation noise of the f - g route.
class noise_floor_error : public std::runtime_error {
public:
    explicit noise_floor_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lacuna
