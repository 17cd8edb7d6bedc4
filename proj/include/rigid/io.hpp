#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigid/poly.hpp"
#include "rigid/rigidity.hpp"

namespace rigid {

// Text formats. All parsers throw ParseError with a line number on malformed
// input; writers emit a canonical form so write(read(write(x))) is byte-identical.
//
// Function table:
//   fqn-table v1
//   q <int>
//   n <int>
//   <q^n values, whitespace separated, point-index order>
//
// Witness:
//   rigidity-witness v1
//   q <int>
//   n <int>
//   eps <num>/<den>
//   d <int>
//   terms <count>
//   <e_1> ... <e_n> <coeff>     one line per term, graded order
//   bad_count <int>

void write_table(std::ostream& os, const FunctionTable& f);
FunctionTable read_table(std::istream& is);

void write_witness(std::ostream& os, const Witness& w);
/// Zero coefficients are accepted and dropped; repeated monomials are rejected.
Witness read_witness(std::istream& is);

inline constexpr const char* kSweepHeader = "d,m_d,deficit,half_d,rank_bound,bad_count,distance,exact_rank";

/// exact_rank is written as NA when it was not computed.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

FunctionTable load_table(const std::string& path);
Witness load_witness(const std::string& path);
void save_table(const std::string& path, const FunctionTable& f);
void save_witness(const std::string& path, const Witness& w);

}  // namespace rigid
