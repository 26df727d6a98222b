#pragma once

#include <string>

#include "coxtwist/maximality.hpp"
#include "coxtwist/moves.hpp"
#include "coxtwist/verify.hpp"

namespace coxtwist {

// graph G { s1; s2; s1 -- s2; }  one statement per line.
std::string maximalityDot(const MaximalityGraph& graph);
// {"vertices":[1,2],"edges":[[1,2]]}, 1-based.
std::string maximalityJson(const MaximalityGraph& graph);

// Vertices labelled by their expression; braid edges solid, half-braid
// dashed, other initial moves dotted.
std::string expressionGraphDot(const ExpressionGraph& graph);
std::string expressionGraphJson(const ExpressionGraph& graph);

std::string movePathText(const MovePath& path);
std::string movePathJson(const MovePath& path);

// {"system", "theta", "passed", "checks": [...], "notes": [...]}
std::string reportJson(const VerificationReport& report);
std::string reportText(const VerificationReport& report);

std::string edgeStyle(EdgeKind kind);

}  // namespace coxtwist
