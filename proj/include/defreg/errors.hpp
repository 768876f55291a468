#pragma once

#include <stdexcept>
#include <string>

namespace defreg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid input (bad syntax, unknown names,
// cyclic relations, ...). The CLI maps these to exit code 1.
class InputError : public Error {
public:
  using Error::Error;
};

// A configured size guard was hit. The CLI maps these to exit code 2.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class DenominatorDividesP : public Error {
public:
  using Error::Error;
};

class InvalidField : public InputError {
public:
  using InputError::InputError;
};

class InvalidComplex : public InputError {
public:
  using InputError::InputError;
};

class FaceBudgetExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

class ClosureBudgetExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

class InvalidPoset : public InputError {
public:
  using InputError::InputError;
};

class UnknownElement : public InputError {
public:
  using InputError::InputError;
};

class MissingDecomposer : public Error {
public:
  using Error::Error;
};

class ZeroIdeal : public InputError {
public:
  using InputError::InputError;
};

class NonSquarefree : public InputError {
public:
  using InputError::InputError;
};

class UnknownVariable : public InputError {
public:
  using InputError::InputError;
};

class AlreadyPrime : public Error {
public:
  using Error::Error;
};

class MixedRanks : public Error {
public:
  using Error::Error;
};

class CyclicRelations : public InvalidPoset {
public:
  using InvalidPoset::InvalidPoset;
};

class DuplicateId : public InvalidPoset {
public:
  using InvalidPoset::InvalidPoset;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

} // namespace defreg
