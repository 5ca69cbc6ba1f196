#pragma once

#include <cstddef>
#include <random>

#include "pickwick/optheory/matrix_tuple.hpp"

namespace pickwick {

/// Random commuting tuples with prescribed row norm.
///
/// `polynomial` builds T_i = q_i(A) for a random upper-triangular A and random
/// low-degree q_i; `diagonalizable` builds T_i = S D_i S^{-1} for a random
/// well-conditioned S. Both are rescaled to the requested row norm.
enum class CommutingFamily { Polynomial, Diagonalizable };

MatrixTuple random_commuting_tuple(std::mt19937_64& rng, std::size_t d, Eigen::Index n,
                                   double row_norm_target, CommutingFamily family);

Matrix random_unitary(std::mt19937_64& rng, Eigen::Index n);

Complex random_complex(std::mt19937_64& rng);

/// Uniform-ish point of the ball of radius `radius` in C^d.
Vector random_ball_vector(std::mt19937_64& rng, std::size_t d, double radius);

}  // namespace pickwick
