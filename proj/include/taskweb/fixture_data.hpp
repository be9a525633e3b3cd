// Copyright 2026 The TaskWeb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_fixture.py; do not edit by hand.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace taskweb::fixture_data {

inline constexpr std::uint64_t kGeneratorSeed = 20230524u;
inline constexpr int kSeedsPerCell = 56;
inline constexpr int kEmbeddingDim = 16;

struct TaskRow {
  std::string_view id;
  std::string_view category;
  bool target;
};

inline constexpr std::array<TaskRow, 22> kTasks{{
    {"anli", "nli", true},
    {"cb", "nli", true},
    {"qnli", "nli", true},
    {"rte", "nli", true},
    {"scitail", "nli", true},
    {"snli", "nli", true},
    {"mrpc", "paraphrase", true},
    {"qqp", "paraphrase", true},
    {"stsb", "paraphrase", true},
    {"imdb", "sentiment", true},
    {"rotten_tomatoes", "sentiment", true},
    {"copa", "commonsense", true},
    {"cosmosqa", "commonsense", true},
    {"hellaswag", "commonsense", true},
    {"piqa", "commonsense", true},
    {"quartz", "commonsense", true},
    {"socialiqa", "commonsense", true},
    {"winogrande", "commonsense", true},
    {"wic", "semantics", true},
    {"wsc", "semantics", true},
    {"boolq", "qa", true},
    {"squad2", "qa", false},
}};

struct CellRow {
  std::uint8_t source;
  std::uint8_t target;
  double pc;
  int pm_count;  // out of kSeedsPerCell
};

inline constexpr std::array<CellRow, 441> kCells{{
    {0, 1, 0.057314, 34},
    {0, 2, 0.008771, 30},
    {0, 3, 0.018257, 31},
    {0, 4, 0.009686, 29},
    {0, 5, -0.004029, 30},
    {0, 6, -0.005114, 29},
    {0, 7, -0.041743, 24},
    {0, 8, 0.000686, 29},
    {0, 9, -0.003314, 29},
    {0, 10, -0.009114, 29},
    {0, 11, 0.026686, 29},
    {0, 12, 0.0144, 28},
    {0, 13, 0.0194, 28},
    {0, 14, 0.006686, 29},
    {0, 15, 0.0128, 28},
    {0, 16, -0.0054, 28},
    {0, 17, 0.0212, 28},
    {0, 18, -0.008514, 29},
    {0, 19, -0.001714, 29},
    {0, 20, 0.0042, 28},
    {1, 0, 0.015971, 30},
    {1, 2, 0.022686, 29},
    {1, 3, 0.007286, 29},
    {1, 4, 0.005971, 30},
    {1, 5, 0.011286, 29},
    {1, 6, -0.004, 28},
    {1, 7, -0.038571, 26},
    {1, 8, -0.001086, 27},
    {1, 9, -0.018943, 24},
    {1, 10, -0.006486, 27},
    {1, 11, -0.0076, 28},
    {1, 12, -0.0032, 28},
    {1, 13, -0.0062, 28},
    {1, 14, 0.036571, 30},
    {1, 15, -0.015657, 25},
    {1, 16, -0.041657, 25},
    {1, 17, 0.0682, 35},
    {1, 18, 0.015743, 32},
    {1, 19, 0.0022, 28},
    {1, 20, 0.005771, 30},
    {2, 0, -0.012714, 29},
    {2, 1, 0.002286, 29},
    {2, 3, 0.016486, 29},
    {2, 4, -0.0082, 28},
    {2, 5, 0.0162, 28},
    {2, 6, 0.037057, 31},
    {2, 7, -0.035457, 25},
    {2, 8, -0.010886, 27},
    {2, 9, 0.009686, 29},
    {2, 10, -0.027457, 25},
    {2, 11, 0.009714, 27},
    {2, 12, -0.022257, 25},
    {2, 13, 0.0036, 28},
    {2, 14, -0.082743, 17},
    {2, 15, -0.007286, 27},
    {2, 16, -0.015943, 24},
    {2, 17, 0.0194, 28},
    {2, 18, -0.036571, 26},
    {2, 19, -0.031857, 25},
    {2, 20, 0.0078, 28},
    {3, 0, 0.026971, 30},
    {3, 1, 0.009971, 30},
    {3, 2, 0.026486, 29},
    {3, 4, 0.017257, 31},
    {3, 5, -0.008114, 29},
    {3, 6, -0.018886, 27},
    {3, 7, -0.017086, 27},
    {3, 8, -0.023771, 26},
    {3, 9, -0.003, 28},
    {3, 10, -0.012171, 26},
    {3, 11, 0.002886, 29},
    {3, 12, -0.002371, 26},
    {3, 13, -0.0042, 28},
    {3, 14, 0.0122, 28},
    {3, 15, -0.019286, 27},
    {3, 16, -0.0088, 28},
    {3, 17, 0.029286, 29},
    {3, 18, -0.001914, 29},
    {3, 19, -0.0072, 28},
    {3, 20, 0.0054, 28},
    {4, 0, 0.029029, 33},
    {4, 1, -0.002714, 29},
    {4, 2, 0.022171, 30},
    {4, 3, 0.023686, 29},
    {4, 5, 0.015686, 29},
    {4, 6, 0.0086, 28},
    {4, 7, -0.020943, 24},
    {4, 8, 0.009086, 29},
    {4, 9, 0.0156, 28},
    {4, 10, -0.033743, 24},
    {4, 11, 0.0152, 28},
    {4, 12, -0.020771, 26},
    {4, 13, 0.022286, 29},
    {4, 14, -0.003914, 29},
    {4, 15, 0.011514, 27},
    {4, 16, -0.017371, 26},
    {4, 17, 0.014, 28},
    {4, 18, 0.001, 28},
    {4, 19, -0.0084, 28},
    {4, 20, 0.0024, 28},
    {5, 0, 0.026086, 29},
    {5, 1, 0.020771, 30},
    {5, 2, 0.018086, 29},
    {5, 3, 0.027857, 31},
    {5, 4, -0.010514, 29},
    {5, 6, 0.0216, 28},
    {5, 7, 0.028743, 32},
    {5, 8, 0.0032, 28},
    {5, 9, 0.0196, 28},
    {5, 10, 0.0158, 28},
    {5, 11, -0.005314, 29},
    {5, 12, 0.0196, 28},
    {5, 13, 0.033371, 30},
    {5, 14, 0.017771, 30},
    {5, 15, 0.0022, 28},
    {5, 16, -0.001, 28},
    {5, 17, 0.019457, 31},
    {5, 18, 0.012286, 29},
    {5, 19, 0.02, 28},
    {5, 20, 0.029971, 30},
    {6, 0, 0.025486, 29},
    {6, 1, 0.0014, 28},
    {6, 2, 0.0042, 28},
    {6, 3, 0.0162, 28},
    {6, 4, -0.0168, 28},
    {6, 5, 0.030086, 29},
    {6, 7, -0.0068, 28},
    {6, 8, 0.0164, 28},
    {6, 9, 0.001, 28},
    {6, 10, -0.007086, 27},
    {6, 11, -0.001, 28},
    {6, 12, -0.111229, 16},
    {6, 13, 0.0192, 28},
    {6, 14, 0.0206, 28},
    {6, 15, -0.005886, 27},
    {6, 16, -0.028886, 27},
    {6, 17, 0.025286, 29},
    {6, 18, -0.0018, 28},
    {6, 19, 0.0138, 28},
    {6, 20, 0.024886, 29},
    {7, 0, 0.0138, 28},
    {7, 1, -0.063629, 23},
    {7, 2, 0.000314, 27},
    {7, 3, -0.031086, 27},
    {7, 4, -0.065114, 22},
    {7, 5, 0.003, 28},
    {7, 6, 0.0122, 28},
    {7, 8, -0.0082, 28},
    {7, 9, 0.002, 28},
    {7, 10, -0.022886, 27},
    {7, 11, -0.0032, 28},
    {7, 12, -0.061429, 23},
    {7, 13, 0.0144, 28},
    {7, 14, 0.0074, 28},
    {7, 15, -0.0124, 28},
    {7, 16, 0.004029, 26},
    {7, 17, 0.016886, 29},
    {7, 18, -0.019971, 26},
    {7, 19, -0.036371, 26},
    {7, 20, -0.033743, 24},
    {8, 0, -0.0056, 28},
    {8, 1, -0.011086, 27},
    {8, 2, 0.0126, 28},
    {8, 3, -0.101371, 19},
    {8, 4, 0.0198, 28},
    {8, 5, -0.018657, 25},
    {8, 6, 0.001686, 29},
    {8, 7, 0.004286, 29},
    {8, 9, -0.017257, 25},
    {8, 10, -0.039457, 25},
    {8, 11, 0.001714, 27},
    {8, 12, -0.0064, 28},
    {8, 13, -0.001, 28},
    {8, 14, -0.0188, 28},
    {8, 15, -0.016, 28},
    {8, 16, -0.031229, 23},
    {8, 17, 0.0154, 28},
    {8, 18, 0.008, 28},
    {8, 19, 0.0072, 28},
    {8, 20, -0.007114, 29},
    {9, 0, -0.0034, 28},
    {9, 1, 0.0116, 28},
    {9, 2, -0.061571, 19},
    {9, 3, 0.0186, 28},
    {9, 4, -0.026771, 26},
    {9, 5, 0.0154, 28},
    {9, 6, 0.002971, 30},
    {9, 7, -0.040429, 23},
    {9, 8, -0.0054, 28},
    {9, 10, 0.005286, 29},
    {9, 11, -0.0028, 28},
    {9, 12, 0.011, 28},
    {9, 13, 0.003771, 30},
    {9, 14, 0.0052, 28},
    {9, 15, 0.0018, 28},
    {9, 16, -0.000971, 26},
    {9, 17, -0.003914, 29},
    {9, 18, 0.0214, 28},
    {9, 19, 0.0076, 28},
    {9, 20, -0.001714, 29},
    {10, 0, 0.016886, 29},
    {10, 1, 0.016771, 30},
    {10, 2, 0.015886, 29},
    {10, 3, 0.030486, 29},
    {10, 4, -0.013314, 29},
    {10, 5, 0.022686, 29},
    {10, 6, 0.004971, 30},
    {10, 7, 0.040257, 31},
    {10, 8, 0.032057, 31},
    {10, 9, 0.008086, 29},
    {10, 11, 0.039257, 31},
    {10, 12, 0.002086, 29},
    {10, 13, 0.002486, 29},
    {10, 14, 0.026171, 30},
    {10, 15, 0.0202, 28},
    {10, 16, -0.001, 28},
    {10, 17, 0.016771, 30},
    {10, 18, -0.005514, 29},
    {10, 19, -0.010114, 29},
    {10, 20, 0.019371, 30},
    {11, 0, 0.034114, 34},
    {11, 1, 0.026686, 29},
    {11, 2, 0.0194, 28},
    {11, 3, -0.012114, 29},
    {11, 4, -0.013314, 29},
    {11, 5, 0.016486, 29},
    {11, 6, 0.0124, 28},
    {11, 7, 0.021286, 29},
    {11, 8, 0.007571, 30},
    {11, 9, -0.000629, 30},
    {11, 10, 0.005486, 29},
    {11, 12, 0.028257, 31},
    {11, 13, 0.011371, 30},
    {11, 14, 0.008571, 30},
    {11, 15, 0.013657, 31},
    {11, 16, 0.019971, 30},
    {11, 17, 0.032171, 30},
    {11, 18, 0.012286, 29},
    {11, 19, 0.027943, 32},
    {11, 20, 0.016371, 30},
    {12, 0, 0.016143, 32},
    {12, 1, 0.035657, 31},
    {12, 2, 0.037371, 30},
    {12, 3, 0.025857, 31},
    {12, 4, 0.0644, 35},
    {12, 5, 0.092886, 36},
    {12, 6, -0.002914, 29},
    {12, 7, -0.012314, 29},
    {12, 8, 0.024029, 33},
    {12, 9, 0.016886, 29},
    {12, 10, 0.002171, 30},
    {12, 11, 0.028457, 31},
    {12, 13, 0.027371, 30},
    {12, 14, 0.033857, 31},
    {12, 15, 0.004857, 31},
    {12, 16, 0.05, 35},
    {12, 17, 0.044029, 33},
    {12, 18, 0.0788, 35},
    {12, 19, 0.038371, 30},
    {12, 20, 0.032257, 31},
    {13, 0, -0.0058, 28},
    {13, 1, 0.0194, 28},
    {13, 2, -0.004086, 27},
    {13, 3, 0.0138, 28},
    {13, 4, -0.0046, 28},
    {13, 5, -0.0208, 28},
    {13, 6, -0.0592, 21},
    {13, 7, -0.011686, 27},
    {13, 8, 0.0026, 28},
    {13, 9, -0.017171, 26},
    {13, 10, -0.001, 28},
    {13, 11, -0.008314, 29},
    {13, 12, 0.010686, 29},
    {13, 14, -0.012914, 29},
    {13, 15, 0.018686, 29},
    {13, 16, -0.063429, 23},
    {13, 17, 0.033657, 31},
    {13, 18, 0.0114, 28},
    {13, 19, -0.015, 28},
    {13, 20, 0.0066, 28},
    {14, 0, 0.0156, 28},
    {14, 1, 0.006514, 27},
    {14, 2, -0.030743, 24},
    {14, 3, -0.042343, 24},
    {14, 4, -0.048914, 22},
    {14, 5, -0.116829, 16},
    {14, 6, -0.028857, 25},
    {14, 7, -0.003286, 27},
    {14, 8, -0.006086, 27},
    {14, 9, -0.020486, 27},
    {14, 10, -0.001971, 26},
    {14, 11, -0.038829, 23},
    {14, 12, -0.015571, 26},
    {14, 13, 0.0144, 28},
    {14, 15, -0.028971, 26},
    {14, 16, -0.051429, 23},
    {14, 17, -0.004514, 29},
    {14, 18, -0.012057, 25},
    {14, 19, -0.025086, 27},
    {14, 20, 0.000714, 27},
    {15, 0, -0.017886, 27},
    {15, 1, 0.010514, 27},
    {15, 2, -0.046229, 23},
    {15, 3, -0.047457, 25},
    {15, 4, -0.015543, 24},
    {15, 5, -0.008057, 25},
    {15, 6, -0.0814, 21},
    {15, 7, -0.062714, 22},
    {15, 8, -0.031171, 26},
    {15, 9, -0.023943, 24},
    {15, 10, -0.049829, 23},
    {15, 11, -0.021486, 27},
    {15, 12, -0.0488, 21},
    {15, 13, -0.094657, 18},
    {15, 14, -0.012171, 26},
    {15, 16, -0.022857, 25},
    {15, 17, 0.0136, 28},
    {15, 18, -0.019171, 26},
    {15, 19, -0.013686, 27},
    {15, 20, -0.057943, 24},
    {16, 0, 0.057343, 32},
    {16, 1, 0.025771, 30},
    {16, 2, 0.031743, 32},
    {16, 3, 0.057143, 32},
    {16, 4, 0.009657, 31},
    {16, 5, 0.004686, 29},
    {16, 6, 0.030886, 29},
    {16, 7, 0.008571, 30},
    {16, 8, 0.0194, 28},
    {16, 9, 0.027886, 29},
    {16, 10, 0.036171, 30},
    {16, 11, 0.056943, 32},
    {16, 12, 0.013771, 30},
    {16, 13, 0.013171, 30},
    {16, 14, 0.016971, 30},
    {16, 15, 0.035657, 31},
    {16, 17, -0.004114, 29},
    {16, 18, 0.042057, 31},
    {16, 19, 0.003171, 30},
    {16, 20, 0.038171, 30},
    {17, 0, 0.012886, 29},
    {17, 1, 0.0144, 28},
    {17, 2, 0.004686, 29},
    {17, 3, 0.018486, 29},
    {17, 4, 0.020086, 29},
    {17, 5, 0.011086, 29},
    {17, 6, 0.016971, 30},
    {17, 7, 0.0162, 28},
    {17, 8, 0.0128, 28},
    {17, 9, 0.027686, 29},
    {17, 10, 0.001886, 29},
    {17, 11, 0.043343, 32},
    {17, 12, 0.035571, 30},
    {17, 13, 0.025371, 30},
    {17, 14, 0.017571, 30},
    {17, 15, 0.036457, 31},
    {17, 16, 0.0166, 28},
    {17, 18, 0.030686, 29},
    {17, 19, -0.011514, 29},
    {17, 20, 0.021171, 30},
    {18, 0, 0.011286, 29},
    {18, 1, -0.0014, 28},
    {18, 2, 0.0114, 28},
    {18, 3, 0.0114, 28},
    {18, 4, 0.0036, 28},
    {18, 5, -0.0036, 28},
    {18, 6, -0.009114, 29},
    {18, 7, 0.0042, 28},
    {18, 8, -0.027086, 27},
    {18, 9, 0.007886, 29},
    {18, 10, -0.024943, 24},
    {18, 11, -0.001429, 30},
    {18, 12, -0.011086, 27},
    {18, 13, -0.005514, 29},
    {18, 14, 0.015286, 29},
    {18, 15, -0.009657, 25},
    {18, 16, -0.013743, 24},
    {18, 17, 0.030686, 29},
    {18, 19, 0.046057, 31},
    {18, 20, 0.016886, 29},
    {19, 0, 0.0192, 28},
    {19, 1, -0.074171, 19},
    {19, 2, -0.010771, 26},
    {19, 3, 0.010514, 27},
    {19, 4, -0.047029, 23},
    {19, 5, -0.033057, 25},
    {19, 6, -0.008571, 26},
    {19, 7, -0.016486, 27},
    {19, 8, -0.006371, 26},
    {19, 9, -0.044257, 25},
    {19, 10, -0.017257, 25},
    {19, 11, -0.011486, 27},
    {19, 12, -0.029571, 26},
    {19, 13, -0.0052, 28},
    {19, 14, -0.013971, 26},
    {19, 15, -0.070714, 22},
    {19, 16, -0.014686, 27},
    {19, 17, 0.0128, 28},
    {19, 18, 0.0198, 28},
    {19, 20, -0.0036, 28},
    {20, 0, -0.006, 28},
    {20, 1, -0.030257, 25},
    {20, 2, -0.037029, 23},
    {20, 3, -0.0064, 28},
    {20, 4, -0.035629, 23},
    {20, 5, -0.031429, 23},
    {20, 6, -0.025829, 23},
    {20, 7, -0.008171, 26},
    {20, 8, -0.004857, 25},
    {20, 9, -0.092943, 17},
    {20, 10, -0.047829, 23},
    {20, 11, -0.021371, 26},
    {20, 12, -0.0182, 28},
    {20, 13, -0.0124, 28},
    {20, 14, 0.010314, 27},
    {20, 15, -0.066029, 23},
    {20, 16, -0.018371, 26},
    {20, 17, 0.012, 28},
    {20, 18, -0.039143, 24},
    {20, 19, 0.002, 28},
    {21, 0, 0.014571, 30},
    {21, 1, 0.039171, 30},
    {21, 2, 0.035371, 30},
    {21, 3, -0.011514, 29},
    {21, 4, 0.000886, 29},
    {21, 5, 0.009686, 29},
    {21, 6, 0.019, 28},
    {21, 7, 0.025086, 29},
    {21, 8, -0.001114, 29},
    {21, 9, -0.001714, 29},
    {21, 10, 0.022286, 29},
    {21, 11, 0.0174, 28},
    {21, 12, 0.02, 28},
    {21, 13, 0.014743, 32},
    {21, 14, -0.011914, 29},
    {21, 15, 0.013486, 29},
    {21, 16, -0.005914, 29},
    {21, 17, 0.0216, 28},
    {21, 18, 0.003886, 29},
    {21, 19, 0.005486, 29},
    {21, 20, 0.022286, 29},
}};

inline constexpr std::array<std::array<double, 16>, 22> kEmbeddings{{
    {-0.374835, 0.705774, 0.212819, 0.487707, 0.545584, 0.842218, 0.334405, 0.236211, 1.077143, -0.324084, 0.622425, 0.646443, -0.557048, 0.363468, 0.405817, -0.380158},
    {-0.340201, 0.166607, -0.323805, 0.58696, -0.333581, -0.255683, 1.036128, 0.514426, 0.687174, 0.495703, 0.828391, -0.164298, -1.28099, 0.037585, -0.119324, 0.285521},
    {-1.352428, -0.23467, 0.138289, 0.139306, -0.229236, 0.531169, -0.266824, 0.288416, 1.169667, 0.201669, 0.49093, 1.123208, -0.769945, -0.776548, -0.418314, -0.515358},
    {-0.378157, 0.303851, 0.596203, 0.390104, 0.197681, 0.699209, 0.518875, 1.311492, 0.340053, 0.753998, 0.108917, -0.323703, -0.670121, -0.967592, 0.011653, -0.000892},
    {-1.586437, 0.179184, 0.871752, 0.256961, -0.716333, 1.074922, -0.018857, 0.583692, 1.238877, 0.269885, 0.205157, 0.858458, -0.374279, -0.638402, -0.473722, -0.091828},
    {0.807327, 0.228458, 0.089762, -0.237, -0.184107, 0.64984, 0.368759, 1.232208, 1.658604, 0.251093, 0.52507, 0.529332, -0.038313, -0.473194, 0.100083, -0.339816},
    {0.865622, 0.197869, -1.045867, 1.21655, 0.549521, 1.253103, -0.122869, 0.557691, -0.097318, -0.059206, -0.808962, -0.92643, 0.93346, -0.2893, -0.457521, 0.100585},
    {1.915803, 0.649883, -0.698449, 1.403457, 0.301574, 0.921507, -0.752279, 1.057292, -0.894561, -0.209665, -0.012885, -1.235391, 0.558586, 0.200287, -0.138232, 0.326943},
    {1.496296, -0.607395, -0.728681, 0.990481, -0.198229, 1.427261, 0.286625, 0.441042, 0.194224, 0.78253, -0.404587, -2.234342, -0.21854, -0.458455, -0.598663, 0.073719},
    {0.060431, 0.58626, -1.019099, -1.178339, -0.662005, 0.577365, -0.059204, -0.452074, -0.276356, -0.753508, 1.345498, 0.005656, 0.646372, -1.061697, -0.546275, -0.222329},
    {-0.231922, 0.037532, -0.277037, -0.412184, -0.770828, 0.896325, -0.046316, -0.189945, -0.536801, -1.032508, 1.363378, -0.473283, 0.404554, 0.182003, -1.015799, -0.294857},
    {-1.627971, -0.466718, 0.593973, -0.483879, 0.899078, 0.476774, -0.073213, -0.58896, -0.968278, 1.218272, 0.335914, 1.012944, -1.706696, -0.883813, -3.252102, 0.333774},
    {-1.353979, -1.255422, 1.118902, -0.036933, 0.580736, 1.22824, 0.285841, -1.052775, -1.215154, 1.541577, 1.318597, -0.391208, -0.561337, -0.122423, -2.165455, -0.725533},
    {-0.410995, -0.105013, 0.631723, -0.41573, -0.092654, 0.593078, 1.1462, -0.65513, -0.386198, 1.322413, 0.754161, -0.608275, -1.71478, -0.655942, -0.780849, -0.205888},
    {-1.278001, -1.150107, 1.534795, -0.449689, 0.470753, 0.571124, -0.99454, -0.501023, -0.584728, 1.167076, -0.094896, 1.128904, -0.601278, -0.387067, -0.95281, -0.314726},
    {-0.202188, -0.280107, -0.378607, -1.463735, 0.234403, -0.322516, -0.515607, -0.749042, -0.407342, 0.196168, 0.318026, 0.004372, -1.453049, 0.299834, -0.588042, -0.054205},
    {-0.65284, -1.253985, 1.231854, 0.428924, -0.143573, 0.966392, -0.091125, -1.312877, -1.017946, 1.351018, 1.012952, 0.413893, -0.835404, 0.380527, -1.727292, 0.048406},
    {-0.879235, -0.817052, 1.242492, -0.694199, 0.370317, 0.916564, 0.595668, -0.594696, -1.749856, 1.307551, 0.868232, 0.101144, -1.190813, -0.832342, -0.731398, 0.619986},
    {-0.67452, -0.253085, -0.23952, 0.237571, 0.190329, 0.137691, -0.539141, -0.186425, 0.095034, 0.126156, 0.573027, 0.749093, -0.445604, 0.580704, 0.031819, 0.958035},
    {-0.800228, -0.6544, 0.157784, -0.168346, 0.587202, 1.051032, -0.025547, -0.188306, -0.08537, 0.993526, 0.042957, 0.811924, -0.330115, 0.843133, -0.764246, 0.095667},
    {0.15317, 0.597291, -0.490711, -1.144405, 0.033851, -0.412795, -0.126203, 0.527125, -0.426142, -0.296636, 0.346191, -0.885141, 0.305709, 0.30687, -0.596821, 0.482641},
    {-0.390014, -0.043186, -0.948726, -0.913632, 0.915975, -0.141635, -0.130435, -0.361303, -1.034316, 0.04623, 0.435871, -0.444877, -1.173826, 0.331806, -0.863475, -0.634477},
}};

}  // namespace taskweb::fixture_data
