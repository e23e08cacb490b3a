#pragma once

#include <iosfwd>
#include <string>

#include "zsat/cnf.hpp"

namespace zsat {

struct ParseStats {
  uint64_t tautologies_dropped = 0;
  uint64_t duplicate_literals_dropped = 0;
};

struct ParsedCnf {
  CnfInstance instance;
  ParseStats stats;
};

/// Reads DIMACS CNF: `c` comment lines, a `p cnf V C` header, 0-terminated
/// clauses. Repeated literals inside a clause are dropped, tautological
/// clauses are dropped and counted, an input empty clause is kept. Content
/// after a lone `%` line is ignored. Malformed input raises ParseError with
/// the offending line number.
ParsedCnf parse_dimacs(std::istream& in);
ParsedCnf parse_dimacs_file(const std::string& path);
ParsedCnf parse_dimacs_text(const std::string& text);

void write_dimacs(std::ostream& out, const CnfInstance& cnf);
std::string write_dimacs(const CnfInstance& cnf);

/// Pigeonhole instance with `holes` holes and holes+1 pigeons. Variable
/// (i-1)*holes + j means "pigeon i sits in hole j". Per pigeon one clause
/// requiring some hole, per hole and pigeon pair one clause forbidding
/// sharing. Unsatisfiable for every holes >= 1.
CnfInstance gen_pigeonhole(int holes);

}  // namespace zsat
