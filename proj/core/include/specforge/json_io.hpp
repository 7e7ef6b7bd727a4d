#pragma once

// String-based JSON serialization for the domain types. The implementation
// uses a vendored JSON library privately; no third-party types appear here,
// so installed headers depend on Boost only.
//
// Wire formats:
//   measure : {"dim": d, "atoms": [{"pos": ["1/4", ...], "weight": "1/2"}, ...]}
//   spectrum: {"base": [0, 1, ...] or [[0,0], ...], "period": M or null, "dim": d}
//   spec    : {"ladder": [2,3,2], "type": "I"|"II", "side": "odd"|"even",
//              "level": k, "tail_on": "odd"|"even"|null}
//   set pair: {"A": [...], "B": [...], "n": n}
//   mask    : {"m": m, "cells": "0110..."}
//   translates: {"count": N, "offsets": ["0", "1/2", ...]}
//
// Parsers throw std::invalid_argument on malformed input. Ladder entries are
// validated (>= 2, <= 2^32).

#include "specforge/factorizer.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/spectrum.hpp"
#include "specforge/tiling.hpp"

#include <string>

namespace specforge {

std::string measure_to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const std::string& text);

std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

std::string factor_spec_to_json(const FactorSpec& spec);
FactorSpec factor_spec_from_json(const std::string& text);

std::string set_pair_to_json(const SetPair& sp);
SetPair set_pair_from_json(const std::string& text);

std::string grid_mask_to_json(const GridMask& g);
GridMask grid_mask_from_json(const std::string& text);

std::string translate_system_to_json(const TranslateSystem& t);

// {"p": <measure>, "q": <measure>} used by the CLI factor-measures command.
std::pair<DiscreteMeasure, DiscreteMeasure> measure_pair_from_json(
    const std::string& text);

}  // namespace specforge
