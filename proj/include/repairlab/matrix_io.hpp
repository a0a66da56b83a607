// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlab/error.hpp"
#include "repairlab/matrix.hpp"

namespace repairlab {

// Text format:
//   rows cols {"p":P,"tower":[deg,[m_0,...,m_deg]]}
//   one line per row; entries separated by spaces, each entry the comma-joined
//   coefficient list of the element in the power basis (low-to-high).

template <class F>
std::string dump_matrix(const F& f, const Matrix<F>& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << f.descriptor().dump() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      const auto coeffs = f.coefficients(m(i, j));
      for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (t) out << ',';
        out << coeffs[t];
      }
    }
    out << '\n';
  }
  return out.str();
}

/// Parses a dump written over the same field; MalformedDump on any mismatch.
template <class F>
Matrix<F> load_matrix(const F& f, const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorCode::kMalformedDump, "empty dump");
  std::istringstream hs(header);
  std::size_t rows = 0, cols = 0;
  if (!(hs >> rows >> cols)) throw Error(ErrorCode::kMalformedDump, "header must start with rows and cols");
  std::string rest;
  std::getline(hs, rest);
  nlohmann::json desc;
  try {
    desc = nlohmann::json::parse(rest);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedDump, std::string("field descriptor: ") + e.what());
  }
  if (desc != f.descriptor()) {
    throw Error(ErrorCode::kMalformedDump, "field descriptor " + desc.dump() + " does not match " + f.descriptor().dump());
  }
  Matrix<F> m(rows, cols);
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kMalformedDump, "missing row " + std::to_string(i));
    std::istringstream ls(line);
    std::string tok;
    std::size_t j = 0;
    while (ls >> tok) {
      if (j >= cols) throw Error(ErrorCode::kMalformedDump, "row " + std::to_string(i) + " has too many entries");
      std::vector<std::uint32_t> coeffs;
      std::istringstream ts(tok);
      std::string part;
      while (std::getline(ts, part, ',')) {
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(part, &used);
          if (used != part.size()) throw std::invalid_argument(part);
          coeffs.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kMalformedDump, "bad coefficient '" + part + "'");
        }
      }
      m(i, j++) = f.from_coefficients(coeffs);
    }
    if (j != cols) throw Error(ErrorCode::kMalformedDump, "row " + std::to_string(i) + " has too few entries");
  }
  return m;
}

}  // namespace repairlab
