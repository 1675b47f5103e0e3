#pragma once

// Generated by `cfweno derive-coefficients --format header`. Do not edit.
// Polynomials are in s = 1 - |nu|, ascending powers. Stencil coefficients
// act on differences u_e - u_center.

#include "cfweno/types.hpp"

namespace cfweno::frozen {

template <Layout L, int R>
struct Table;

template <>
struct Table<Layout::compact, 2> {
  static constexpr int width = 3;
  static constexpr int center = 1;
  static constexpr int sub_degree = 1;
  static constexpr int big_degree = 2;
  static constexpr double average_sub[2][2][2] = {
      {{0.0, -1.0},
       {0.0, 0.0}},
      {{0.0, 0.0},
       {0.0, 1.0}},
  };
  static constexpr double average_big[3][3] = {
      {0.0, -1.0, 1.0},
      {0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0},
  };
  static constexpr double foot_sub[2][2][2] = {
      {{1.0, -2.0},
       {0.0, 0.0}},
      {{0.0, 0.0},
       {-1.0, 2.0}},
  };
  static constexpr double foot_big[3][3] = {
      {1.0, -4.0, 3.0},
      {0.0, 0.0, 0.0},
      {0.0, -2.0, 3.0},
  };
  static constexpr int average_weight_num_degree = 1;
  static constexpr double average_weight_num[2][2] = {
      {1.0, -1.0},
      {0.0, 1.0},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[2][1] = {
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 2;
  static constexpr double foot_weight_num[2][3] = {
      {0.5, -2.0, 1.5},
      {0.0, 1.0, -1.5},
  };
  static constexpr int foot_weight_den_degree = 1;
  static constexpr double foot_weight_den[2][2] = {
      {0.5, -1.0},
      {0.5, -1.0},
  };
  static constexpr int pole_count = 1;
  static constexpr double poles[1] = {0.5};
  static constexpr int square_count = 1;
  static constexpr double square_scale[2][1] = {
      {4.0},
      {4.0},
  };
  static constexpr double square_coeff[2][1][3] = {
      {{1.0, 0.0, 0.0}},
      {{0.0, 0.0, 1.0}},
  };
};

template <>
struct Table<Layout::compact, 3> {
  static constexpr int width = 5;
  static constexpr int center = 2;
  static constexpr int sub_degree = 2;
  static constexpr int big_degree = 4;
  static constexpr double average_sub[3][3][3] = {
      {{0.0, 0.0, 0.5},
       {0.0, -1.0, -1.0},
       {0.0, 0.0, 0.0}},
      {{0.0, -1.0, 1.0},
       {0.0, 0.0, 0.0},
       {0.0, 0.0, 1.0}},
      {{0.0, 0.0, 0.0},
       {0.0, 2.0, -1.0},
       {0.0, -0.5, 0.5}},
  };
  static constexpr double average_big[5][5] = {
      {0.0, 0.0, 0.16666666666666666, -0.25, 0.083333333333333329},
      {0.0, -1.0, 0.5, 1.0, -0.5},
      {0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.5, -0.5},
      {0.0, 0.0, -0.083333333333333329, 0.0, 0.083333333333333329},
  };
  static constexpr double foot_sub[3][3][3] = {
      {{0.0, -1.0, 1.5},
       {1.0, 0.0, -3.0},
       {0.0, 0.0, 0.0}},
      {{1.0, -4.0, 3.0},
       {0.0, 0.0, 0.0},
       {0.0, -2.0, 3.0}},
      {{0.0, 0.0, 0.0},
       {-2.0, 6.0, -3.0},
       {0.5, -2.0, 1.5}},
  };
  static constexpr double foot_big[5][5] = {
      {0.0, -0.33333333333333331, 1.25, -1.3333333333333333, 0.41666666666666669},
      {1.0, -3.0, -1.5, 6.0, -2.5},
      {0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -2.0, 1.5, 4.0, -2.5},
      {0.0, 0.16666666666666666, -0.25, -0.33333333333333331, 0.41666666666666669},
  };
  static constexpr int average_weight_num_degree = 2;
  static constexpr double average_weight_num[3][3] = {
      {0.33333333333333331, -0.5, 0.16666666666666666},
      {0.66666666666666663, 0.33333333333333331, -0.33333333333333331},
      {0.0, 0.16666666666666666, 0.16666666666666666},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[3][1] = {
      {1.0},
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 4;
  static constexpr double foot_weight_num[3][5] = {
      {0.22222222222222221, -0.83333333333333337, 0.88888888888888884, -0.27777777777777779, 0.0},
      {0.14814814814814814, -0.57407407407407407, 0.018518518518518517, 1.1111111111111112, -0.55555555555555558},
      {0.0, 0.1111111111111111, -0.055555555555555552, -0.27777777777777779, 0.0},
  };
  static constexpr int foot_weight_den_degree = 2;
  static constexpr double foot_weight_den[3][3] = {
      {0.66666666666666663, -1.0, 0.0},
      {0.22222222222222221, -1.0, 1.0},
      {0.33333333333333331, -1.0, 0.0},
  };
  static constexpr int pole_count = 2;
  static constexpr double poles[2] = {0.33333333333333331, 0.66666666666666663};
  static constexpr int square_count = 2;
  static constexpr double square_scale[3][2] = {
      {10.0, 3.8999999999999999},
      {40.0, 3.8999999999999999},
      {48.0, 0.8125},
  };
  static constexpr double square_coeff[3][2][5] = {
      {{1.0, -2.1000000000000001, 0.0, 0.0, 0.0},
       {0.0, 1.0, 0.0, 0.0, 0.0}},
      {{0.0, 1.0, 0.0, 0.94999999999999996, 0.0},
       {0.0, 0.0, 0.0, 1.0, 0.0}},
      {{0.0, 0.0, 0.0, 1.0, -0.4375},
       {0.0, 0.0, 0.0, 0.0, 1.0}},
  };
};

template <>
struct Table<Layout::compact, 4> {
  static constexpr int width = 7;
  static constexpr int center = 3;
  static constexpr int sub_degree = 3;
  static constexpr int big_degree = 6;
  static constexpr double average_sub[4][4][4] = {
      {{0.0, 0.0, -0.5, -0.5},
       {0.0, 0.0, 1.75, 1.25},
       {0.0, -1.0, -2.0, -1.0},
       {0.0, 0.0, 0.0, 0.0}},
      {{0.0, 0.0, 0.25, -0.25},
       {0.0, -1.0, 0.0, 1.0},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, 0.0, 0.5, 0.5}},
      {{0.0, -1.0, 1.5, -0.5},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, 0.0, 2.0, -1.0},
       {0.0, 0.0, -0.25, 0.25}},
      {{0.0, 0.0, 0.0, 0.0},
       {0.0, 4.0, -4.0, 1.0},
       {0.0, -3.0, 4.25, -1.25},
       {0.0, 1.0, -1.5, 0.5}},
  };
  static constexpr double average_big[7][7] = {
      {0.0, 0.0, -0.1111111111111111, 0.1111111111111111, 0.083333333333333329, -0.1111111111111111, 0.027777777777777776},
      {0.0, 0.0, 0.51851851851851849, -0.62962962962962965, -0.16666666666666666, 0.37962962962962965, -0.10185185185185185},
      {0.0, -1.0, 0.0, 1.75, -0.25, -0.75, 0.25},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 1.0, -0.75, -0.5, 0.25},
      {0.0, 0.0, -0.23148148148148148, -0.12962962962962962, 0.33333333333333331, 0.12962962962962962, -0.10185185185185185},
      {0.0, 0.0, 0.055555555555555552, 0.027777777777777776, -0.083333333333333329, -0.027777777777777776, 0.027777777777777776},
  };
  static constexpr double foot_sub[4][4][4] = {
      {{0.0, 1.0, 0.0, -2.0},
       {0.0, -3.5, 1.5, 5.0},
       {1.0, 2.0, -3.0, -4.0},
       {0.0, 0.0, 0.0, 0.0}},
      {{0.0, -0.5, 1.5, -1.0},
       {1.0, -2.0, -3.0, 4.0},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, -1.0, 0.0, 2.0}},
      {{1.0, -5.0, 6.0, -2.0},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, -4.0, 9.0, -4.0},
       {0.0, 0.5, -1.5, 1.0}},
      {{0.0, 0.0, 0.0, 0.0},
       {-4.0, 16.0, -15.0, 4.0},
       {3.0, -14.5, 16.5, -5.0},
       {-1.0, 5.0, -6.0, 2.0}},
  };
  static constexpr double foot_big[7][7] = {
      {0.0, 0.22222222222222221, -0.66666666666666663, 0.1111111111111111, 0.97222222222222221, -0.83333333333333337, 0.19444444444444445},
      {0.0, -1.037037037037037, 3.4444444444444446, -1.8518518518518519, -2.7314814814814814, 2.8888888888888888, -0.71296296296296291},
      {1.0, -2.0, -5.25, 8.0, 2.5, -6.0, 1.75},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -2.0, 0.0, 7.0, -1.25, -4.5, 1.75},
      {0.0, 0.46296296296296297, -0.30555555555555558, -1.8518518518518519, 1.0185185185185186, 1.3888888888888888, -0.71296296296296291},
      {0.0, -0.1111111111111111, 0.083333333333333329, 0.44444444444444442, -0.27777777777777779, -0.33333333333333331, 0.19444444444444445},
  };
  static constexpr int average_weight_num_degree = 3;
  static constexpr double average_weight_num[4][4] = {
      {0.22222222222222221, -0.44444444444444442, 0.27777777777777779, -0.055555555555555552},
      {0.51851851851851849, 0.0, -0.3888888888888889, 0.12962962962962962},
      {0.25925925925925924, 0.3888888888888889, 0.0, -0.12962962962962962},
      {0.0, 0.055555555555555552, 0.1111111111111111, 0.055555555555555552},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[4][1] = {
      {1.0},
      {1.0},
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 6;
  static constexpr double foot_weight_num[4][7] = {
      {-0.1111111111111111, 0.33333333333333331, -0.055555555555555552, -0.4861111111111111, 0.41666666666666669, -0.097222222222222224, 0.0},
      {-0.12962962962962962, 0.25925925925925924, 0.5092592592592593, -1.0162037037037037, -0.18518518518518517, 0.72453703703703709, -0.22685185185185186},
      {0.064814814814814811, -0.25, -0.19212962962962962, 0.95138888888888884, -0.034722222222222224, -0.63657407407407407, 0.22685185185185186},
      {0.0, 0.055555555555555552, 0.013888888888888888, -0.20833333333333334, -0.069444444444444448, 0.097222222222222224, 0.0},
  };
  static constexpr int foot_weight_den_degree = 3;
  static constexpr double foot_weight_den[4][4] = {
      {-0.5, 0.0, 1.0, 0.0},
      {-0.25, 0.5, 0.5, -1.0},
      {0.25, -1.5, 2.5, -1.0},
      {0.5, -2.0, 1.0, 0.0},
  };
  static constexpr int pole_count = 3;
  static constexpr double poles[3] = {0.29289321881345243, 0.5, 0.70710678118654746};
  static constexpr int square_count = 3;
  static constexpr double square_scale[4][3] = {
      {196.19999999999999, 7.9612640163098876, 3.8999999999999999},
      {39.049999999999997, 40.0, 3.8999999999999999},
      {196.19999999999999, 39.009174311926607, 0.79593916588272184},
      {1000.8, 21.692645883293366, 0.28059880239520957},
  };
  static constexpr double square_coeff[4][3][7] = {
      {{1.0, -2.6019367991845055, 2.214067278287462, 0.0, 0.0, 0.0, 0.0},
       {0.0, 1.0, -2.1000000000000001, 0.0, 0.0, 0.0, 0.0},
       {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0}},
      {{0.0, 1.0, -4.0, 0.0, -2.0, 0.0, 0.0},
       {0.0, 0.0, 1.0, 0.0, 0.94999999999999996, 0.0, 0.0},
       {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0}},
      {{0.0, 0.0, 1.0, 0.0, 1.7859327217125383, -0.3980632008154944, 0.0},
       {0.0, 0.0, 0.0, 0.0, 1.0, -0.4285826277830041, 0.0},
       {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0}},
      {{0.0, 0.0, 0.0, 0.0, 1.0, -1.1460831334932053, 0.43405275779376501},
       {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -0.58275449101796406},
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}},
  };
};

template <>
struct Table<Layout::nodes, 2> {
  static constexpr int width = 3;
  static constexpr int center = 1;
  static constexpr int sub_degree = 1;
  static constexpr int big_degree = 2;
  static constexpr double average_sub[2][2][2] = {
      {{0.0, -0.5},
       {0.0, 0.0}},
      {{0.0, 0.0},
       {0.0, 0.5}},
  };
  static constexpr double average_big[3][3] = {
      {0.0, -0.33333333333333331, 0.16666666666666666},
      {0.0, 0.0, 0.0},
      {0.0, 0.16666666666666666, 0.16666666666666666},
  };
  static constexpr double foot_sub[2][2][2] = {
      {{0.5, -1.0},
       {0.0, 0.0}},
      {{0.0, 0.0},
       {-0.5, 1.0}},
  };
  static constexpr double foot_big[3][3] = {
      {0.33333333333333331, -1.0, 0.5},
      {0.0, 0.0, 0.0},
      {-0.16666666666666666, 0.0, 0.5},
  };
  static constexpr int average_weight_num_degree = 1;
  static constexpr double average_weight_num[2][2] = {
      {0.66666666666666663, -0.33333333333333331},
      {0.33333333333333331, 0.33333333333333331},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[2][1] = {
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 2;
  static constexpr double foot_weight_num[2][3] = {
      {0.33333333333333331, -1.0, 0.5},
      {0.16666666666666666, 0.0, -0.5},
  };
  static constexpr int foot_weight_den_degree = 1;
  static constexpr double foot_weight_den[2][2] = {
      {0.5, -1.0},
      {0.5, -1.0},
  };
  static constexpr int pole_count = 1;
  static constexpr double poles[1] = {0.5};
  static constexpr int square_count = 1;
  static constexpr double square_scale[2][1] = {
      {1.0},
      {1.0},
  };
  static constexpr double square_coeff[2][1][3] = {
      {{1.0, 0.0, 0.0}},
      {{0.0, 0.0, 1.0}},
  };
};

template <>
struct Table<Layout::nodes, 3> {
  static constexpr int width = 5;
  static constexpr int center = 2;
  static constexpr int sub_degree = 2;
  static constexpr int big_degree = 4;
  static constexpr double average_sub[3][3][3] = {
      {{0.0, 0.16666666666666666, 0.16666666666666666},
       {0.0, -0.83333333333333337, -0.33333333333333331},
       {0.0, 0.0, 0.0}},
      {{0.0, -0.33333333333333331, 0.16666666666666666},
       {0.0, 0.0, 0.0},
       {0.0, 0.16666666666666666, 0.16666666666666666}},
      {{0.0, 0.0, 0.0},
       {0.0, 1.1666666666666667, -0.33333333333333331},
       {0.0, -0.33333333333333331, 0.16666666666666666}},
  };
  static constexpr double average_big[5][5] = {
      {0.0, 0.050000000000000003, 0.0083333333333333332, -0.033333333333333333, 0.0083333333333333332},
      {0.0, -0.45000000000000001, 0.17499999999999999, 0.09166666666666666, -0.033333333333333333},
      {0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.21666666666666667, 0.25833333333333336, 0.0083333333333333332, -0.033333333333333333},
      {0.0, -0.033333333333333333, -0.033333333333333333, 0.0083333333333333332, 0.0083333333333333332},
  };
  static constexpr double foot_sub[3][3][3] = {
      {{-0.16666666666666666, 0.0, 0.5},
       {0.83333333333333337, -1.0, -1.0},
       {0.0, 0.0, 0.0}},
      {{0.33333333333333331, -1.0, 0.5},
       {0.0, 0.0, 0.0},
       {-0.16666666666666666, 0.0, 0.5}},
      {{0.0, 0.0, 0.0},
       {-1.1666666666666667, 3.0, -1.0},
       {0.33333333333333331, -1.0, 0.5}},
  };
  static constexpr double foot_big[5][5] = {
      {-0.050000000000000003, 0.083333333333333329, 0.125, -0.16666666666666666, 0.041666666666666664},
      {0.45000000000000001, -1.25, 0.25, 0.5, -0.16666666666666666},
      {0.0, 0.0, 0.0, 0.0, 0.0},
      {-0.21666666666666667, -0.083333333333333329, 0.75, 0.16666666666666666, -0.16666666666666666},
      {0.033333333333333333, 0.0, -0.125, 0.0, 0.041666666666666664},
  };
  static constexpr int average_weight_num_degree = 2;
  static constexpr double average_weight_num[3][3] = {
      {0.29999999999999999, -0.25, 0.050000000000000003},
      {0.59999999999999998, 0.10000000000000001, -0.10000000000000001},
      {0.10000000000000001, 0.14999999999999999, 0.050000000000000003},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[3][1] = {
      {1.0},
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 6;
  static constexpr double foot_weight_num[3][7] = {
      {-0.10000000000000001, 0.16666666666666666, 0.25, -0.33333333333333331, 0.083333333333333329, 0.0, 0.0},
      {-0.13333333333333333, 0.35555555555555557, 0.45000000000000001, -1.4444444444444444, 0.30555555555555558, 0.5, -0.16666666666666666},
      {0.066666666666666666, 0.0, -0.25, 0.0, 0.083333333333333329, 0.0, 0.0},
  };
  static constexpr int foot_weight_den_degree = 4;
  static constexpr double foot_weight_den[3][5] = {
      {-0.33333333333333331, 0.0, 1.0, 0.0, 0.0},
      {-0.22222222222222221, 0.66666666666666663, 0.33333333333333331, -2.0, 1.0},
      {0.66666666666666663, -2.0, 1.0, 0.0, 0.0},
  };
  static constexpr int pole_count = 2;
  static constexpr double poles[2] = {0.42264973081037427, 0.57735026918962573};
  static constexpr int square_count = 2;
  static constexpr double square_scale[3][2] = {
      {1.3333333333333333, 0.8125},
      {1.3333333333333333, 0.8125},
      {8.3333333333333339, 0.13},
  };
  static constexpr double square_coeff[3][2][5] = {
      {{1.0, -2.375, 0.0, 0.0, 0.0},
       {0.0, 1.0, 0.0, 0.0, 0.0}},
      {{0.0, 1.0, 0.0, 0.625, 0.0},
       {0.0, 0.0, 0.0, 1.0, 0.0}},
      {{0.0, 0.0, 0.0, 1.0, -0.38},
       {0.0, 0.0, 0.0, 0.0, 1.0}},
  };
};

template <>
struct Table<Layout::nodes, 4> {
  static constexpr int width = 7;
  static constexpr int center = 3;
  static constexpr int sub_degree = 3;
  static constexpr int big_degree = 6;
  static constexpr double average_sub[4][4][4] = {
      {{0.0, -0.083333333333333329, -0.125, -0.041666666666666664},
       {0.0, 0.41666666666666669, 0.54166666666666663, 0.125},
       {0.0, -1.0833333333333333, -0.70833333333333337, -0.125},
       {0.0, 0.0, 0.0, 0.0}},
      {{0.0, 0.083333333333333329, 0.041666666666666664, -0.041666666666666664},
       {0.0, -0.58333333333333337, 0.041666666666666664, 0.125},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, 0.083333333333333329, 0.125, 0.041666666666666664}},
      {{0.0, -0.25, 0.20833333333333334, -0.041666666666666664},
       {0.0, 0.0, 0.0, 0.0},
       {0.0, 0.41666666666666669, 0.29166666666666669, -0.125},
       {0.0, -0.083333333333333329, -0.041666666666666664, 0.041666666666666664}},
      {{0.0, 0.0, 0.0, 0.0},
       {0.0, 1.9166666666666667, -0.95833333333333337, 0.125},
       {0.0, -1.0833333333333333, 0.79166666666666663, -0.125},
       {0.0, 0.25, -0.20833333333333334, 0.041666666666666664}},
  };
  static constexpr double average_big[7][7] = {
      {0.0, -0.0095238095238095247, -0.003968253968253968, 0.0071428571428571426, 0.00019841269841269841, -0.0011904761904761906, 0.00019841269841269841},
      {0.0, 0.090476190476190474, 0.021031746031746033, -0.066468253968253968, 0.0099206349206349201, 0.0057539682539682543, -0.0011904761904761906},
      {0.0, -0.50952380952380949, 0.17103174603174603, 0.15019841269841269, -0.044246031746031748, -0.010912698412698412, 0.002976190476190476},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.24047619047619048, 0.30992063492063493, 0.018253968253968255, -0.058134920634920637, -0.003968253968253968, 0.002976190476190476},
      {0.0, -0.059523809523809521, -0.065079365079365084, 0.014087301587301588, 0.021031746031746033, 0.00019841269841269841, -0.0011904761904761906},
      {0.0, 0.0071428571428571426, 0.0071428571428571426, -0.0025793650793650793, -0.0025793650793650793, 0.00019841269841269841, 0.00019841269841269841},
  };
  static constexpr double foot_sub[4][4][4] = {
      {{0.083333333333333329, 0.083333333333333329, -0.25, -0.16666666666666666},
       {-0.41666666666666669, -0.25, 1.25, 0.5},
       {1.0833333333333333, -0.75, -1.75, -0.5},
       {0.0, 0.0, 0.0, 0.0}},
      {{-0.083333333333333329, 0.083333333333333329, 0.25, -0.16666666666666666},
       {0.58333333333333337, -1.25, -0.25, 0.5},
       {0.0, 0.0, 0.0, 0.0},
       {-0.083333333333333329, -0.083333333333333329, 0.25, 0.16666666666666666}},
      {{0.25, -0.91666666666666663, 0.75, -0.16666666666666666},
       {0.0, 0.0, 0.0, 0.0},
       {-0.41666666666666669, 0.25, 1.25, -0.5},
       {0.083333333333333329, -0.083333333333333329, -0.25, 0.16666666666666666}},
      {{0.0, 0.0, 0.0, 0.0},
       {-1.9166666666666667, 5.75, -3.25, 0.5},
       {1.0833333333333333, -3.75, 2.75, -0.5},
       {-0.25, 0.91666666666666663, -0.75, 0.16666666666666666}},
  };
  static constexpr double foot_big[7][7] = {
      {0.0095238095238095247, -0.011111111111111112, -0.033333333333333333, 0.027777777777777776, 0.0069444444444444441, -0.0083333333333333332, 0.0013888888888888889},
      {-0.090476190476190474, 0.1388888888888889, 0.26250000000000001, -0.30555555555555558, 0.020833333333333332, 0.041666666666666664, -0.0083333333333333332},
      {0.50952380952380949, -1.3611111111111112, 0.0625, 0.77777777777777779, -0.16666666666666666, -0.083333333333333329, 0.020833333333333332},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {-0.24047619047619048, -0.1388888888888889, 0.875, 0.30555555555555558, -0.27083333333333331, -0.041666666666666664, 0.020833333333333332},
      {0.059523809523809521, 0.011111111111111112, -0.23749999999999999, -0.027777777777777776, 0.10416666666666667, 0.0083333333333333332, -0.0083333333333333332},
      {-0.0071428571428571426, 0.0, 0.029166666666666667, 0.0, -0.013888888888888888, 0.0, 0.0013888888888888889},
  };
  static constexpr int average_weight_num_degree = 3;
  static constexpr double average_weight_num[4][4] = {
      {0.11428571428571428, -0.12380952380952381, 0.042857142857142858, -0.0047619047619047623},
      {0.51428571428571423, -0.12857142857142856, -0.057142857142857141, 0.014285714285714285},
      {0.34285714285714286, 0.20000000000000001, -0.014285714285714285, -0.014285714285714285},
      {0.028571428571428571, 0.052380952380952382, 0.028571428571428571, 0.0047619047619047623},
  };
  static constexpr int average_weight_den_degree = 0;
  static constexpr double average_weight_den[4][1] = {
      {1.0},
      {1.0},
      {1.0},
      {1.0},
  };
  static constexpr int foot_weight_num_degree = 9;
  static constexpr double foot_weight_num[4][10] = {
      {0.057142857142857141, -0.066666666666666666, -0.20000000000000001, 0.16666666666666666, 0.041666666666666664, -0.050000000000000003, 0.0083333333333333332, 0.0, 0.0, 0.0},
      {-0.12857142857142856, 0.064285714285714279, 0.98988095238095242, -0.39107142857142857, -1.9958333333333333, 0.65000000000000002, 0.87916666666666665, -0.26250000000000001, -0.087499999999999994, 0.025000000000000001},
      {-0.25714285714285712, 0.90000000000000002, 0.46666666666666667, -3.7214285714285715, 2.2791666666666668, 1.3374999999999999, -1.3083333333333333, 0.0625, 0.13750000000000001, -0.025000000000000001},
      {0.042857142857142858, 0.0, -0.17499999999999999, 0.0, 0.083333333333333329, 0.0, -0.0083333333333333332, 0.0, 0.0, 0.0},
  };
  static constexpr int foot_weight_den_degree = 6;
  static constexpr double foot_weight_den[4][7] = {
      {0.5, 0.5, -1.5, -1.0, 0.0, 0.0, 0.0},
      {-0.25, 0.0, 1.75, 0.0, -3.25, 0.0, 1.0},
      {-0.75, 3.5, -2.75, -7.0, 11.75, -6.0, 1.0},
      {1.5, -5.5, 4.5, -1.0, 0.0, 0.0, 0.0},
  };
  static constexpr int pole_count = 3;
  static constexpr double poles[3] = {0.38196601125010499, 0.5, 0.6180339887498949};
  static constexpr int square_count = 3;
  static constexpr double square_scale[4][3] = {
      {2.2791666666666668, 0.64777574649603897, 0.79593916588272184},
      {1.1125, 1.3270911360799, 0.79593916588272184},
      {2.2791666666666668, 4.8110907982937237, 0.10716698332277813},
      {45.845833333333331, 1.1883122784695084, 0.021570002124495433},
  };
  static constexpr double square_coeff[4][3][7] = {
      {{1.0, -3.5484460694698354, 4.2431444241316267, 0.0, 0.0, 0.0, 0.0},
       {0.0, 1.0, -2.4896519285042333, 0.0, 0.0, 0.0, 0.0},
       {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0}},
      {{0.0, 1.0, -3.0749063670411987, 0.0, -0.92509363295880154, 0.0, 0.0},
       {0.0, 0.0, 1.0, 0.0, 0.6326434619002822, 0.0, 0.0},
       {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0}},
      {{0.0, 0.0, 1.0, 0.0, 1.756855575868373, -0.45155393053016452, 0.0},
       {0.0, 0.0, 0.0, 0.0, 1.0, -0.3352121595946802, 0.0},
       {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0}},
      {{0.0, 0.0, 0.0, 0.0, 1.0, -0.7836953558120513, 0.21094247023539034},
       {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -0.42792861695347356},
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}},
  };
};

}  // namespace cfweno::frozen
