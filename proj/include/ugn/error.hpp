#ifndef UGN_ERROR_HPP_
#define UGN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ugn {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text, file or descriptor input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace ugn

#endif  // UGN_ERROR_HPP_
