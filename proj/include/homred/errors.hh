/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_ERRORS_HH
#define HOMRED_GUARD_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homred
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidGraph : public Error
    {
        public:
            using Error::Error;
    };

    class TargetUnreachable : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidHandle : public Error
    {
        public:
            using Error::Error;
    };

    class SelfLoopProduced : public Error
    {
        public:
            using Error::Error;
    };

    class WindowEmpty : public Error
    {
        public:
            using Error::Error;
    };

    class NoVacantColor : public Error
    {
        private:
            int _vertex;

        public:
            NoVacantColor(int vertex, const std::string & message) :
                Error(message),
                _vertex(vertex)
            {
            }

            auto vertex() const -> int { return _vertex; }
    };

    class BucketBoundExceeded : public Error
    {
        public:
            using Error::Error;
    };

    class BudgetExceeded : public Error
    {
        private:
            std::uint64_t _partial;

        public:
            BudgetExceeded(std::uint64_t partial, const std::string & message) :
                Error(message),
                _partial(partial)
            {
            }

            /// Number of complete results found before the budget ran out.
            auto partial_count() const -> std::uint64_t { return _partial; }
    };

    class GroupingPropertyViolated : public Error
    {
        public:
            using Error::Error;
    };

    class IsolatedVertex : public Error
    {
        private:
            int _vertex;

        public:
            IsolatedVertex(int vertex, const std::string & message) :
                Error(message),
                _vertex(vertex)
            {
            }

            auto vertex() const -> int { return _vertex; }
    };

    class TargetTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidWitness : public Error
    {
        public:
            using Error::Error;
    };

    class GenerationFailed : public Error
    {
        public:
            using Error::Error;
    };

    /// Input text errors carry the 1-based line they were found on.
    class InputError : public Error
    {
        private:
            int _line;

        public:
            InputError(int line, const std::string & message) :
                Error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }
    };

    class ParseError : public InputError
    {
        public:
            using InputError::InputError;
    };

    class DuplicateEdge : public InputError
    {
        public:
            using InputError::InputError;
    };

    class LoopEdge : public InputError
    {
        public:
            using InputError::InputError;
    };

    class VertexOutOfRange : public InputError
    {
        public:
            using InputError::InputError;
    };
}

#endif
