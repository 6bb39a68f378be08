#pragma once

// Generated by tests/oracles/generate.py (mpmath, 50 digits).

namespace oracle_values {

inline constexpr double energies_L2_h1[] = {-0.64302653891672580079, -0.14302653891672580079, 0.14302653891672580079, 0.64302653891672580079};
inline constexpr double energies_L3_h0p5[] = {-0.73143860712964461981, -0.34270615284878636032, -0.11126754571914174052, 0.11126754571914174052, 0.34270615284878636032, 0.73143860712964461981};

struct GapCase { int L; double h; double gap; };
inline constexpr GapCase gaps[] = {{4, 3, 0.00011754376413748507063}, {8, 0.5, 0.015204468077833481640}, {16, 2, 8.2236143675978775059e-14}, {32, 1, 2.4075431066248701626e-14}, {32, 2, 1.0414521376316784121e-27}};

struct HalfChainCase { int L; double h; double s_vn; double s_2; };
inline constexpr HalfChainCase half_chain[] = {{4, 0, 0.56974848442162576986, 0.32777956618472848223}, {4, 1, 1.0900003618877200426, 0.79618267305414269724}, {6, 2, 2.4398393924623769855, 1.9058953834818341197}, {8, 4, 5.0670721433377873413, 4.6907500841638150936}, {16, 0.5, 1.8639570919399363226, 1.4123735729964274544}};

inline constexpr double profile_vn_L3_h2[] = {0.69314718055994530942, 1.0180794023830715166, 1.3721773172175041216, 1.0180794023830715166, 0.69314718055994530942};
inline constexpr double nu_half_L3_h2[] = {0.10667896012577840437, 0.50000000000000000000, 0.89332103987422159563};
inline constexpr double nu_half_L3_h3[] = {0.21883806112838403993, 0.50000000000000000000, 0.78116193887161596007};
inline constexpr double nu_half_L2_h1[] = {0.11419230022966417759, 0.88580769977033582241};

struct OverlapCase { int L; double h; double overlap; };
inline constexpr OverlapCase rainbow_overlaps[] = {{2, 1, 0.81804468050562080766}, {2, 3, 0.95659753344744261110}, {3, 1, 0.66016954676720865750}, {3, 2, 0.80870464783067485526}, {3, 3, 0.91345853979565313870}, {3, 5, 0.98679140229746141826}};

struct GammaCase { double x; double value; };
inline constexpr GammaCase gamma_values[] = {{0.5, 1.7724538509055160273}, {0.25, 3.6256099082219083119}, {0.75, 1.2254167024651776451}, {1, 1.0000000000000000000}, {2.5, 1.3293403881791370205}, {7.3, 1271.4236336639092731}, {-0.5, -3.5449077018110320546}, {-2.5, -0.94530872048294188123}, {0.001, 999.42377248459546611}, {30.7, 9.5281174990795006228e+31}, {150.2, 1.0370235662990395734e+261}};

struct FnCase { double n; double value; };
inline constexpr FnCase f_n_values[] = {{2, -0.67597824006728472900}, {3, -0.50546808815608927803}, {0.75, -1.0958303725437005565}, {5, -0.33568195150878121026}, {10, -0.18247654292421920647}};

}  // namespace oracle_values
