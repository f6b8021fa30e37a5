#ifndef TROPICAL_ERRORS_HH
#define TROPICAL_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace tropical
{
    /// Malformed input: bad vertex indices, loops, duplicate edges, bad files.
    class InputError : public std::runtime_error
    {
    public:
        explicit InputError(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    /// An operation was called on an instance outside its domain.
    class PreconditionError : public std::logic_error
    {
    public:
        explicit PreconditionError(const std::string & message) :
            std::logic_error(message)
        {
        }
    };

    class ParseError : public InputError
    {
    private:
        int _line;

    public:
        ParseError(int line, const std::string & message) :
            InputError("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }
    };

    /// Raised when an internal consistency check fails, which is always a bug.
    class InternalError : public std::logic_error
    {
    public:
        explicit InternalError(const std::string & message) :
            std::logic_error(message)
        {
        }
    };
}

#endif
