#ifndef DRG_ERRORS_HH
#define DRG_ERRORS_HH

#include <stdexcept>
#include <string>

namespace drg
{
    /// Malformed or unsupported input: bad edge list, unknown family, a graph
    /// that is not distance-regular.
    class InputError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A numerical identity failed its residual check.
    class VerificationError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
