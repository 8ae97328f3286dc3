#ifndef PTA_PARSER_HPP
#define PTA_PARSER_HPP

#include <stdexcept>
#include <string>

#include "pta/model.hpp"

namespace pta {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

// Parses a model in the line-oriented grammar:
//
//   pta name ;
//   allow-diagonals ;            # optional
//   clocks x, y ;
//   parameters p1, p2 ;
//   actions a, b ;
//   location l1 { initial ; invariant x <= p1 ; }
//   edge l1 -> l2 { sync a ; guard x = 1 & x <= p1 ; reset x ; }
//
// `!=` atoms in guards are desugared into one edge per strict side.
PtaModel parse_model(const std::string& text);

PtaModel parse_model_file(const std::string& path);

}  // namespace pta

#endif
