#pragma once

#include <stdexcept>
#include <string>

namespace spcls {

/// What went wrong, mapped onto the CLI exit-code contract:
///   input/parse problems -> 1, validation/check failures -> 2,
///   violated internal theorems -> 3 (always a bug somewhere).
enum class Fault {
    parse,

    cycle_detected,
    no_meet,
    no_join,
    no_bottom,
    no_top,

    axiom1,
    axiom2,
    axiom3,

    missing_empty,
    missing_full,
    not_intersection_closed,

    universe_mismatch,
    invalid_input,
    cap_exceeded,
    roundtrip_failure,

    atom_not_found,
    multiple_complements,
    internal_inconsistency,
};

class Error : public std::runtime_error {
public:
    Error(Fault fault, const std::string& message)
        : std::runtime_error(message), fault_(fault) {}

    Fault fault() const { return fault_; }

    int exit_code() const {
        switch (fault_) {
            case Fault::parse:
                return 1;
            case Fault::atom_not_found:
            case Fault::multiple_complements:
            case Fault::internal_inconsistency:
                return 3;
            default:
                return 2;
        }
    }

private:
    Fault fault_;
};

[[noreturn]] inline void fail(Fault fault, const std::string& message) {
    throw Error(fault, message);
}

}  // namespace spcls
