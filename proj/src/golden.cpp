// Generator tables transcribed from the worked examples, in canonical label form.
#include "bcforge/golden.hpp"

namespace bcforge::golden {
const std::vector<GeneratorTable>& generator_tables() {
  static const std::vector<GeneratorTable> tables = {
      {"nakamura-cs-case1", "c-nakamura-1", {
          {{0, 0}, {"1"}},
          {{1, 0}, {"dz_{1,}", "e^{-z1}*dz_{2,}", "e^{z1}*dz_{3,}", "e^{-zb1}*dz_{2,}", "e^{zb1}*dz_{3,}"}},
          {{0, 1}, {"dz_{,1}", "e^{-z1}*dz_{,2}", "e^{z1}*dz_{,3}", "e^{-zb1}*dz_{,2}", "e^{zb1}*dz_{,3}"}},
          {{2, 0}, {"e^{-z1}*dz_{12,}", "e^{z1}*dz_{13,}", "dz_{23,}", "e^{-zb1}*dz_{12,}", "e^{zb1}*dz_{13,}"}},
          {{1, 1}, {"dz_{1,1}", "e^{-z1}*dz_{1,2}", "e^{z1}*dz_{1,3}", "e^{-z1}*dz_{2,1}", "e^{-2z1}*dz_{2,2}", "dz_{2,3}", "e^{z1}*dz_{3,1}", "dz_{3,2}", "e^{2z1}*dz_{3,3}", "e^{-zb1}*dz_{2,1}", "e^{-zb1}*dz_{1,2}", "e^{zb1}*dz_{1,3}", "e^{zb1}*dz_{3,1}", "e^{-2zb1}*dz_{2,2}", "e^{2zb1}*dz_{3,3}"}},
          {{0, 2}, {"e^{-z1}*dz_{,12}", "e^{z1}*dz_{,13}", "dz_{,23}", "e^{-zb1}*dz_{,12}", "e^{zb1}*dz_{,13}"}},
          {{3, 0}, {"dz_{123,}"}},
          {{2, 1}, {"e^{-z1}*dz_{12,1}", "e^{-2z1}*dz_{12,2}", "dz_{12,3}", "e^{z1}*dz_{13,1}", "dz_{13,2}", "e^{2z1}*dz_{13,3}", "dz_{23,1}", "e^{-z1}*dz_{23,2}", "e^{z1}*dz_{23,3}", "e^{-zb1}*dz_{12,1}", "e^{zb1}*dz_{13,1}", "e^{-2zb1}*dz_{12,2}", "e^{-zb1}*dz_{23,2}", "e^{2zb1}*dz_{13,3}", "e^{zb1}*dz_{23,3}"}},
          {{1, 2}, {"e^{-zb1}*dz_{1,12}", "e^{-2zb1}*dz_{2,12}", "dz_{3,12}", "e^{zb1}*dz_{1,13}", "dz_{2,13}", "e^{2zb1}*dz_{3,13}", "dz_{1,23}", "e^{-zb1}*dz_{2,23}", "e^{zb1}*dz_{3,23}", "e^{-z1}*dz_{1,12}", "e^{z1}*dz_{1,13}", "e^{-2z1}*dz_{2,12}", "e^{-z1}*dz_{2,23}", "e^{2z1}*dz_{3,13}", "e^{z1}*dz_{3,23}"}},
          {{0, 3}, {"dz_{,123}"}},
          {{3, 1}, {"dz_{123,1}", "e^{-z1}*dz_{123,2}", "e^{z1}*dz_{123,3}", "e^{-zb1}*dz_{123,2}", "e^{zb1}*dz_{123,3}"}},
          {{2, 2}, {"e^{-2z1}*dz_{12,12}", "dz_{12,13}", "e^{-z1}*dz_{12,23}", "dz_{13,12}", "e^{2z1}*dz_{13,13}", "e^{z1}*dz_{13,23}", "e^{-z1}*dz_{23,12}", "e^{z1}*dz_{23,13}", "dz_{23,23}", "e^{-2zb1}*dz_{12,12}", "e^{-zb1}*dz_{23,12}", "e^{-zb1}*dz_{12,23}", "e^{zb1}*dz_{13,23}", "e^{2zb1}*dz_{13,13}", "e^{zb1}*dz_{23,13}"}},
          {{1, 3}, {"dz_{1,123}", "e^{-zb1}*dz_{2,123}", "e^{zb1}*dz_{3,123}", "e^{-z1}*dz_{2,123}", "e^{z1}*dz_{3,123}"}},
          {{3, 2}, {"e^{-z1}*dz_{123,12}", "e^{z1}*dz_{123,13}", "dz_{123,23}", "e^{-zb1}*dz_{123,12}", "e^{zb1}*dz_{123,13}"}},
          {{2, 3}, {"e^{-z1}*dz_{12,123}", "e^{z1}*dz_{13,123}", "dz_{23,123}", "e^{-zb1}*dz_{12,123}", "e^{zb1}*dz_{13,123}"}},
          {{3, 3}, {"dz_{123,123}"}},
      }},
      {"nakamura-cs-case2", "c-nakamura-2", {
          {{0, 0}, {"1"}},
          {{1, 0}, {"dz_{1,}"}},
          {{0, 1}, {"dz_{,1}"}},
          {{2, 0}, {"dz_{23,}"}},
          {{1, 1}, {"dz_{1,1}", "e^{-2z1}*dz_{2,2}", "e^{-2zb1}*dz_{2,2}", "e^{2z1}*dz_{3,3}", "e^{2zb1}*dz_{3,3}", "dz_{2,3}", "dz_{3,2}"}},
          {{0, 2}, {"dz_{,23}"}},
          {{3, 0}, {"dz_{123,}"}},
          {{2, 1}, {"dz_{23,1}", "e^{-2z1}*dz_{12,2}", "e^{-2zb1}*dz_{12,2}", "e^{2z1}*dz_{13,3}", "e^{2zb1}*dz_{13,3}", "dz_{12,3}", "dz_{13,2}"}},
          {{1, 2}, {"dz_{1,23}", "e^{-2z1}*dz_{2,12}", "e^{-2zb1}*dz_{2,12}", "e^{2z1}*dz_{3,13}", "e^{2zb1}*dz_{3,13}", "dz_{2,13}", "dz_{3,12}"}},
          {{0, 3}, {"dz_{,123}"}},
          {{3, 1}, {"dz_{123,1}"}},
          {{2, 2}, {"dz_{12,13}", "e^{-2z1}*dz_{12,12}", "e^{-2zb1}*dz_{12,12}", "e^{2z1}*dz_{13,13}", "e^{2zb1}*dz_{13,13}", "dz_{23,23}", "dz_{13,12}"}},
          {{1, 3}, {"dz_{1,123}"}},
          {{3, 2}, {"dz_{123,23}"}},
          {{2, 3}, {"dz_{23,123}"}},
          {{3, 3}, {"dz_{123,123}"}},
      }},
      {"nakamura-cs-case3", "c-nakamura-3", {
          {{0, 0}, {"1"}},
          {{1, 0}, {"dz_{1,}"}},
          {{0, 1}, {"dz_{,1}"}},
          {{2, 0}, {"dz_{23,}"}},
          {{1, 1}, {"dz_{1,1}", "dz_{2,3}", "dz_{3,2}"}},
          {{0, 2}, {"dz_{,23}"}},
          {{3, 0}, {"dz_{123,}"}},
          {{2, 1}, {"dz_{23,1}", "dz_{12,3}", "dz_{13,2}"}},
          {{1, 2}, {"dz_{1,23}", "dz_{2,13}", "dz_{3,12}"}},
          {{0, 3}, {"dz_{,123}"}},
          {{3, 1}, {"dz_{123,1}"}},
          {{2, 2}, {"dz_{12,13}", "dz_{23,23}", "dz_{13,12}"}},
          {{1, 3}, {"dz_{1,123}"}},
          {{3, 2}, {"dz_{123,23}"}},
          {{2, 3}, {"dz_{23,123}"}},
          {{3, 3}, {"dz_{123,123}"}},
      }},
      {"nakamura-cp-caseA", "c-ex-nakamura2-1", {
          {{0, 0}, {"1"}},
          {{1, 0}, {"dz_{1,}", "e^{-z1}*dz_{2,}", "e^{z1}*dz_{3,}", "e^{-zb1}*dz_{2,}", "e^{zb1}*dz_{3,}"}},
          {{0, 1}, {"dz_{,1}", "e^{-z1}*dz_{,2}", "e^{z1}*dz_{,3}", "e^{-zb1}*dz_{,2}", "e^{zb1}*dz_{,3}"}},
          {{2, 0}, {"e^{-z1}*dz_{12,}", "e^{z1}*dz_{13,}", "dz_{23,}", "e^{-zb1}*dz_{12,}", "e^{zb1}*dz_{13,}"}},
          {{1, 1}, {"dz_{1,1}", "e^{-z1}*dz_{1,2}", "e^{z1}*dz_{1,3}", "e^{-z1}*dz_{2,1}", "e^{-2z1}*dz_{2,2}", "dz_{2,3}", "e^{z1}*dz_{3,1}", "dz_{3,2}", "e^{2z1}*dz_{3,3}", "e^{-zb1}*dz_{2,1}", "e^{-zb1}*dz_{1,2}", "e^{zb1}*dz_{1,3}", "e^{zb1}*dz_{3,1}", "e^{-2zb1}*dz_{2,2}", "e^{2zb1}*dz_{3,3}"}},
          {{0, 2}, {"e^{-z1}*dz_{,12}", "e^{z1}*dz_{,13}", "dz_{,23}", "e^{-zb1}*dz_{,12}", "e^{zb1}*dz_{,13}"}},
          {{3, 0}, {"dz_{123,}"}},
          {{2, 1}, {"e^{-z1}*dz_{12,1}", "e^{-2z1}*dz_{12,2}", "dz_{12,3}", "e^{z1}*dz_{13,1}", "dz_{13,2}", "e^{2z1}*dz_{13,3}", "dz_{23,1}", "e^{-z1}*dz_{23,2}", "e^{z1}*dz_{23,3}", "e^{-zb1}*dz_{12,1}", "e^{zb1}*dz_{13,1}", "e^{-2zb1}*dz_{12,2}", "e^{-zb1}*dz_{23,2}", "e^{2zb1}*dz_{13,3}", "e^{zb1}*dz_{23,3}"}},
          {{1, 2}, {"e^{-zb1}*dz_{1,12}", "e^{-2zb1}*dz_{2,12}", "dz_{3,12}", "e^{zb1}*dz_{1,13}", "dz_{2,13}", "e^{2zb1}*dz_{3,13}", "dz_{1,23}", "e^{-zb1}*dz_{2,23}", "e^{zb1}*dz_{3,23}", "e^{-z1}*dz_{1,12}", "e^{z1}*dz_{1,13}", "e^{-2z1}*dz_{2,12}", "e^{-z1}*dz_{2,23}", "e^{2z1}*dz_{3,13}", "e^{z1}*dz_{3,23}"}},
          {{0, 3}, {"dz_{,123}"}},
          {{3, 1}, {"dz_{123,1}", "e^{-z1}*dz_{123,2}", "e^{z1}*dz_{123,3}", "e^{-zb1}*dz_{123,2}", "e^{zb1}*dz_{123,3}"}},
          {{2, 2}, {"e^{-2z1}*dz_{12,12}", "dz_{12,13}", "e^{-z1}*dz_{12,23}", "dz_{13,12}", "e^{2z1}*dz_{13,13}", "e^{z1}*dz_{13,23}", "e^{-z1}*dz_{23,12}", "e^{z1}*dz_{23,13}", "dz_{23,23}", "e^{-2zb1}*dz_{12,12}", "e^{-zb1}*dz_{23,12}", "e^{-zb1}*dz_{12,23}", "e^{zb1}*dz_{13,23}", "e^{2zb1}*dz_{13,13}", "e^{zb1}*dz_{23,13}"}},
          {{1, 3}, {"dz_{1,123}", "e^{-zb1}*dz_{2,123}", "e^{zb1}*dz_{3,123}", "e^{-z1}*dz_{2,123}", "e^{z1}*dz_{3,123}"}},
          {{3, 2}, {"e^{-z1}*dz_{123,12}", "e^{z1}*dz_{123,13}", "dz_{123,23}", "e^{-zb1}*dz_{123,12}", "e^{zb1}*dz_{123,13}"}},
          {{2, 3}, {"e^{-z1}*dz_{12,123}", "e^{z1}*dz_{13,123}", "dz_{23,123}", "e^{-zb1}*dz_{12,123}", "e^{zb1}*dz_{13,123}"}},
          {{3, 3}, {"dz_{123,123}"}},
      }},
      {"nakamura-cp-caseB", "nakamura-cplx-par-2", {
          {{0, 0}, {"1"}},
          {{1, 0}, {"dz_{1,}", "e^{-z1}*dz_{2,}", "e^{z1}*dz_{3,}"}},
          {{0, 1}, {"dz_{,1}", "e^{-zb1}*dz_{,2}", "e^{zb1}*dz_{,3}"}},
          {{2, 0}, {"e^{-z1}*dz_{12,}", "e^{z1}*dz_{13,}", "dz_{23,}"}},
          {{1, 1}, {"dz_{1,1}", "e^{-z1}*dz_{2,1}", "e^{z1}*dz_{3,1}", "e^{-zb1}*dz_{1,2}", "e^{zb1}*dz_{1,3}"}},
          {{0, 2}, {"e^{-zb1}*dz_{,12}", "e^{zb1}*dz_{,13}", "dz_{,23}"}},
          {{3, 0}, {"dz_{123,}"}},
          {{2, 1}, {"e^{-z1}*dz_{12,1}", "e^{z1}*dz_{13,1}", "dz_{23,1}", "e^{-zb1}*dz_{23,2}", "e^{zb1}*dz_{23,3}"}},
          {{1, 2}, {"e^{-zb1}*dz_{1,12}", "e^{zb1}*dz_{1,13}", "dz_{1,23}", "e^{-z1}*dz_{2,23}", "e^{z1}*dz_{3,23}"}},
          {{0, 3}, {"dz_{,123}"}},
          {{3, 1}, {"dz_{123,1}", "e^{-zb1}*dz_{123,2}", "e^{zb1}*dz_{123,3}"}},
          {{2, 2}, {"e^{-z1}*dz_{12,23}", "e^{z1}*dz_{13,23}", "dz_{23,23}", "e^{-zb1}*dz_{23,12}", "e^{zb1}*dz_{23,13}"}},
          {{1, 3}, {"dz_{1,123}", "e^{-z1}*dz_{2,123}", "e^{z1}*dz_{3,123}"}},
          {{3, 2}, {"e^{-zb1}*dz_{123,12}", "e^{zb1}*dz_{123,13}", "dz_{123,23}"}},
          {{2, 3}, {"e^{-z1}*dz_{12,123}", "e^{z1}*dz_{13,123}", "dz_{23,123}"}},
          {{3, 3}, {"dz_{123,123}"}},
      }},
  };
  return tables;
}

const std::vector<DegreeTable>& degree_tables() {
  static const std::vector<DegreeTable> tables = {
      {"nakamura-cp-caseA-Agamma", "a-nak-cplx-paral-1", {
          {0, {"1"}},
          {1, {"dz_{1,}", "dz_{,1}"}},
          {2, {"dz_{1,1}", "dz_{23,}", "dz_{2,3}", "dz_{3,2}", "dz_{,23}"}},
          {3, {"dz_{123,}", "dz_{12,3}", "dz_{13,2}", "dz_{3,12}", "dz_{2,13}", "dz_{,123}", "dz_{23,1}", "dz_{1,23}"}},
          {4, {"dz_{123,1}", "dz_{13,12}", "dz_{23,23}", "dz_{12,13}", "dz_{1,123}"}},
          {5, {"dz_{23,123}", "dz_{123,23}"}},
          {6, {"dz_{123,123}"}},
      }},
      {"nakamura-cp-caseB-Agamma", "a-nak-cplx-parall", {
          {0, {"1"}},
          {1, {"dz_{1,}", "dz_{,1}"}},
          {2, {"dz_{1,1}", "dz_{23,}", "dz_{,23}"}},
          {3, {"dz_{123,}", "dz_{,123}", "dz_{23,1}", "dz_{1,23}"}},
          {4, {"dz_{123,1}", "dz_{23,23}", "dz_{1,123}"}},
          {5, {"dz_{23,123}", "dz_{123,23}"}},
          {6, {"dz_{123,123}"}},
      }},
      {"nakamura-cs-case1-Agamma", "cs-dr-harmonic", {
          {0, {"1"}},
          {1, {"dz_{1,}", "dz_{,1}"}},
          {2, {"dz_{23,}", "dz_{1,1}", "dz_{2,3}", "dz_{3,2}", "dz_{,23}"}},
          {3, {"dz_{123,}", "dz_{23,1}", "dz_{12,3}", "dz_{13,2}", "dz_{1,23}", "dz_{2,13}", "dz_{3,12}", "dz_{,123}"}},
          {4, {"dz_{123,1}", "dz_{12,13}", "dz_{23,23}", "dz_{13,12}", "dz_{1,123}"}},
          {5, {"dz_{123,23}", "dz_{23,123}"}},
          {6, {"dz_{123,123}"}},
      }},
  };
  return tables;
}

const std::vector<DimensionTable>& dimension_tables() {
  static const std::vector<DimensionTable> tables = {
      {"nakamura-cs-case1",
       {1, 3, 3, 3, 9, 3, 1, 9, 9, 1, 3, 9, 3, 3, 3, 1},
       {1, 1, 1, 3, 7, 3, 1, 9, 9, 1, 3, 11, 3, 5, 5, 1},
       {1, 2, 5, 8, 5, 2, 1},
       {8, 20, 24, 20, 8},
       false},
      {"nakamura-cs-case2",
       {1, 1, 1, 1, 5, 1, 1, 5, 5, 1, 1, 5, 1, 1, 1, 1},
       {1, 1, 1, 1, 3, 1, 1, 5, 5, 1, 1, 7, 1, 1, 1, 1},
       {1, 2, 5, 8, 5, 2, 1},
       {0, 4, 8, 4, 0},
       false},
      {"nakamura-cs-case3",
       {1, 1, 1, 1, 3, 1, 1, 3, 3, 1, 1, 3, 1, 1, 1, 1},
       {1, 1, 1, 1, 3, 1, 1, 3, 3, 1, 1, 3, 1, 1, 1, 1},
       {1, 2, 5, 8, 5, 2, 1},
       {0, 0, 0, 0, 0},
       true},
      {"nakamura-cp-caseA",
       {1, 3, 3, 3, 9, 3, 1, 9, 9, 1, 3, 9, 3, 3, 3, 1},
       {1, 1, 1, 3, 7, 3, 1, 9, 9, 1, 3, 11, 3, 5, 5, 1},
       {1, 2, 5, 8, 5, 2, 1},
       {8, 20, 24, 20, 8},
       false},
      {"nakamura-cp-caseB",
       {1, 3, 1, 3, 3, 1, 1, 3, 3, 1, 1, 3, 3, 1, 3, 1},
       {1, 1, 1, 3, 1, 3, 1, 3, 3, 1, 1, 5, 1, 3, 3, 1},
       {1, 2, 3, 4, 3, 2, 1},
       {4, 8, 8, 8, 4},
       false},
  };
  return tables;
}

}  // namespace bcforge::golden
