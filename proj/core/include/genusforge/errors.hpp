#ifndef GENUSFORGE_ERRORS_HPP
#define GENUSFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genusforge {

// Error taxonomy. The CLI maps these onto its exit-code contract:
//   invalid input / model violations -> 1
//   no representation / not found / out of range / no witness -> 2
//   certification failed (Reider surrogate rejected the class) -> 3
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

// An even target below the constructive threshold that the pattern search
// could not reach.
struct NoRepresentation : Error {
    using Error::Error;
};

// Bounded search (twist integer, oracle sweep, m-scan) exhausted its budget.
struct NotFound : Error {
    using Error::Error;
};

// Genus below the range the planner can address with the given m_min.
struct OutOfRange : Error {
    using Error::Error;
};

struct NoWitness : Error {
    using Error::Error;
};

// Arithmetic succeeded but the ampleness surrogate rejected the class.
struct CertificationFailed : Error {
    using Error::Error;
};

}  // namespace genusforge

#endif
