#pragma once

#include <string>
#include <vector>

#include "stix/rat.hpp"

// Finite-field tables and the discrete-log construction of optimal line-family
// offsets. Field elements are represented by their integer encoding in 0..q-1:
// the base-p digits of the encoding are the coefficients of the element as a
// polynomial over GF(p) (digit i = coefficient of x^i).

namespace stix {

/// True when q = p^k for a prime p and k >= 1; outputs p and k when requested.
bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

struct FieldTable {
  int p = 0;  // characteristic
  int k = 0;  // extension degree
  int q = 0;  // order, p^k

  // Monic modulus polynomial, coefficient of x^i at index i, size k+1. Degree-1
  // fields use x itself (arithmetic is plain mod p).
  std::vector<int> modulus;

  // Canonical element order a_1..a_q as encodings: elems[0] = 0, elems[1] = 1,
  // then ascending encoding (lex on coefficient vectors, high degree first).
  std::vector<int> elems;

  int alpha = 0;                // primitive element, as an encoding
  std::vector<int> log_of;      // encoding -> discrete log base alpha; log_of[0] = -1
  std::vector<int> exp_of;      // exponent in 0..q-2 -> encoding

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;

  /// Human-readable element name: "0", "1", "w", "w+1", "w^2+2w", ...
  std::string element_name(int enc) const;
};

/// Builds the canonical table for GF(q). Throws DomainError unless q is a prime
/// power >= 2. Deterministic: modulus is the first irreducible monic polynomial
/// by ascending encoding, alpha the first element of full multiplicative order.
FieldTable field_make(int q);

/// Same field arithmetic but with a caller-chosen element order and primitive
/// element. Validates: elems is a permutation of 0..q-1 with elems[0] = 0, and
/// alpha has multiplicative order q-1.
FieldTable field_make_custom(int q, std::vector<int> elems, int alpha);

// Discrete-log matrix of a field with n = q elements: (n+1) x (n+1), entry (i,j)
// equal to log_alpha(a_i - a_j), and 0 whenever i = j or either index is n+1.
// Indices are 0-based in code; the extra index n (0-based) is the "virtual" row
// and column with no field element attached.
struct LogMatrix {
  int n = 0;
  std::vector<std::vector<int>> entry;
};

LogMatrix log_matrix(const FieldTable& f);

/// True when the differences between rows i and j, skipping columns i and j,
/// cover every residue class mod n-1 exactly once. 0-based i, j; i != j.
bool verify_row_difference(const LogMatrix& m, int i, int j);

// Offsets and directions of the n+1 line families. Vector i of u is the offset
// of family i (coordinates i and n both zero, sums to zero); v holds the family
// directions: the n+1 shortest dual-lattice vectors, plus index n's own.
struct OffsetFamily {
  int n = 0;
  std::vector<RatVec> u;  // n+1 offsets, each with n+1 coordinates
  std::vector<RatVec> v;  // n+1 directions, each with n+1 coordinates
};

/// Maps matrix entries through m -> (m + 1/2)/(n-1) - 1/2 off the zero pattern.
/// Requires every row pair of the matrix to pass verify_row_difference; each
/// offset is asserted (not re-centered) to sum to zero.
OffsetFamily offsets_from_matrix(const LogMatrix& m);

/// Convenience: canonical field -> log matrix -> offsets for prime power n.
OffsetFamily make_offset_family(int n);

}  // namespace stix
