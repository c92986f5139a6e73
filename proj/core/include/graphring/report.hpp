#pragma once

#include <string>
#include <vector>

#include "graphring/consum.hpp"
#include "graphring/homology.hpp"
#include "graphring/intersection.hpp"
#include "graphring/plumbing.hpp"
#include "graphring/trivector.hpp"

namespace graphring {

// JSON and aligned-text reports backing the CLI subcommands. JSON output is
// deterministic (insertion-ordered keys).

std::string homology_report_json(const PlumbingGraph& g, const H1Basis& basis,
                                 const std::vector<SurfaceRecipe>& surfaces,
                                 const std::vector<std::string>& warnings);
std::string homology_report_text(const PlumbingGraph& g, const H1Basis& basis,
                                 const std::vector<SurfaceRecipe>& surfaces,
                                 const std::vector<std::string>& warnings);

std::string ring_report_json(const ProductTable& table);
std::string ring_report_text(const ProductTable& table);

std::string consum_report_json(const RingPresentation& p, const Theorem53Result& check);
std::string consum_report_text(const RingPresentation& p, const Theorem53Result& check);

std::string split_report_json(const Form3& omega, const SplitReport& report);
std::string split_report_text(const Form3& omega, const SplitReport& report);

std::string obstruction_report_json(const Form3& omega, const ObstructionVerdict& v);
std::string obstruction_report_text(const Form3& omega, const ObstructionVerdict& v);

std::string normalize_report_json(const NormalizeResult& result,
                                  const std::vector<std::string>& warnings);

}  // namespace graphring
