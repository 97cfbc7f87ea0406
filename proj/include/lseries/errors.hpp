#pragma once

#include <stdexcept>
#include <string>

namespace lseries {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error { using Error::Error; };          // bad argument range
struct PoleError : Error { using Error::Error; };            // evaluation at a pole
struct BranchCutError : Error { using Error::Error; };       // on a cut, no side given
struct ConvergenceError : Error { using Error::Error; };     // series/quadrature stall
struct NotCoprimeError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };     // honest "not implemented for these parameters"

} // namespace lseries
