#pragma once
#include <string>
#include <vector>

#include "tfd/checked.hpp"

namespace golden {

using tfd::i64;

// Hand transcription of the published master table.
struct Row {
    const char* id;
    const char* model;
    const char* omega;
    const char* euler;
    int points;                  // isolated points at each of levels -1 and +1
    std::vector<std::string> z0;  // level-0 classes, any order
    int b2;
    i64 c1_cubed;
    int b_min, b_max;  // extremal normal Chern numbers; extremal areas are 2 + b
};

inline const std::vector<Row> kTable = {
    {"I-1", "S^2 x S^2", "2x+2y", "x-y", 0, {}, 1, 64, 2, 2},
    {"II-1.1", "S^2 x S^2", "2x+2y", "-y", 0, {"x+y"}, 2, 48, 0, 0},
    {"II-1.2", "S^2 x S^2", "2x+2y", "-y", 0, {"x"}, 2, 56, 0, 2},
    {"II-1.3", "S^2 x S^2", "2x+2y", "-y", 0, {"y", "y"}, 3, 48, 0, 0},
    {"II-2.1", "E_{S^2}", "3x+2y", "-x-y", 0, {"y", "x+y"}, 3, 48, -1, 1},
    {"II-2.2", "E_{S^2}", "3x+2y", "-x-y", 0, {"2x+2y"}, 2, 40, -1, -1},
    {"III.1", "E_{S^2} # P2bar", "3x+2y-E1", "-y", 1, {}, 2, 54, 1, 1},
    {"III.2", "S^2 x S^2 # 2 P2bar", "2x+2y-E1-E2", "-y", 2, {}, 3, 44, 0, 0},
    {"III.3", "E_{S^2} # 3 P2bar", "3x+2y-E1-E2-E3", "-x-y", 3, {}, 4, 34, -1, -1},
    {"IV-1-1.1", "E_{S^2} # 2 P2bar", "3x+2y-E1-E2", "-x-y", 2, {"x+y-E1-E2", "x-E1"}, 5, 36, -1, -1},
    {"IV-1-1.2", "E_{S^2} # 2 P2bar", "3x+2y-E1-E2", "-x-y", 2, {"y", "x+y-E1-E2"}, 5, 36, -1, -1},
    {"IV-1-1.3", "E_{S^2} # 2 P2bar", "3x+2y-E1-E2", "-x-y", 2, {"x+y-E1"}, 4, 36, -1, -1},
    {"IV-1-2", "E_{S^2} # 2 P2bar", "3x+2y-E1-E2", "-x-y", 2, {"x-E1"}, 4, 40, -1, 0},
    {"IV-2-1.1", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"2x+y-E1"}, 3, 38, -1, -1},
    {"IV-2-1.2", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"x+y-E1", "x+y-E1"}, 4, 38, -1, -1},
    {"IV-2-2.1", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"x+y"}, 3, 42, -1, 0},
    {"IV-2-2.2", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"y", "x+y-E1"}, 4, 42, -1, 0},
    {"IV-2-3", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"x"}, 3, 46, -1, 1},
    {"IV-2-4", "E_{S^2} # P2bar", "3x+2y-E1", "-x-y", 1, {"E1"}, 3, 50, -1, 2},
    {"IV-2-5", "S^2 x S^2 # P2bar", "2x+2y-E1", "-y", 1, {"x-E1", "y-E1"}, 4, 46, 0, 0},
    {"IV-2-6", "S^2 x S^2 # P2bar", "2x+2y-E1", "-y", 1, {"x-E1"}, 3, 50, 0, 1},
};

}  // namespace golden
