//! Transcribed displays. One row per line, `.` for an empty cell, `H`/`K`
//! for cycle marks, and a trailing `*` for a cell of the highlighted set.
//! Entries may be linear expressions in `m`, `n`, `k`, `nk` (also written `kn`).

pub(crate) const BACON_9: &str = "
 1* 19*  18   .   .   .  36   .   .
 34 17* 21*   .   .   .   2   .   .
  .   . 15* 23*  10  26   .   .   .
  4   .   . 13* 25*   .   .   .  32
  .  14   .   . 11* 27*   .  22   .
  .   .  20   .   .  9* 29*  16   .
  .   .   .  30   .   .  7* 31*   6
  .  24   .   .   .  12   .  5* 33*
35*   .   .   8  28   .   .   .  3*";

pub(crate) const H15_6: &str = "
  6   .   .   .   .   .   .   .   .  -4  89  81   1   8   .
  .  12   .   .   .   .   .   .   .   . -88  83  87  85   2
 86   .  18   .   .   .   .   .   .   .   . -82  77   3  79
 73  80   .  24   .   .   .   .   .   .   .   . -76  71   9
 15  67  74   .  30   .   .   .   .   .   .   .   . -70  65
 59  21  61  68   .  36   .   .   .   .   .   .   .   . -64
-58  53  27  55  62   .  42   .   .   .   .   .   .   .   .
  . -52  47  33  49  56   .  48   .   .   .   .   .   .   .
  .   . -46  41  39  43  50   .  54   .   .   .   .   .   .
  .   .   . -40  35  45  37  44   .  60   .   .   .   .   .
  .   .   .   . -34  29  51  31  38   .  66   .   .   .   .
  .   .   .   .   . -28  23  57  25  32   .  72   .   .   .
  .   .   .   .   .   . -22  17  63  19  26   .  78   .   .
  .   .   .   .   .   .   . -16  11  69  13  20   .  84   .
  .   .   .   .   .   .   .   . -10   5  75   7  14   .  90";

pub(crate) const H19_3: &str = "
 16 -48  32   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
 17  27   . -44   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
-33   . -14   .  47   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .  21   .  15   . -36   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   . -18   . -13   .  31   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .  29   .  -9   . -20   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   . -34   . -12   .  46   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .  45   . -10 -35   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   . -19  30 -11   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   . -25  24   1   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .  22 -50   .  28   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   3   .  37   . -40   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .  26   .  23   . -49   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   . -38   .  42   .  -4   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   . -51   .   8  43   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .  -2  41 -39   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   5  57  53
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  54   6  55
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  56  52   7";

pub(crate) const A0P_M4: &str = "
 16  32   .   .   .   .   .   . -48
-33 -14  47   .   .   .   .   .   .
  . -18 -13  31   .   .   .   .   .
  .   . -34 -12  46   .   .   .   .
  .   .   . -19 -11  30   .   .   .
  .   .   .   . -35 -10  45   .   .
  .   .   .   .   . -20  -9  29   .
  .   .   .   .   .   . -36  15  21
 17   .   .   .   .   .   . -44  27";

pub(crate) const A1_CASE_B: &str = "
 -(6m+1)       6m        1        .        .        .        .
    6m-2 -(12m+2)        .     6m+4        .        .        .
       3        .    10m-3        .     -10m        .        .
       .     6m+2        .     6m-1        . -(12m+1)        .
       .        . -(10m-2)        .    10m+2        .       -4
       .        .        . -(12m+3)        .       2m    10m+3
       .        .        .        .       -2    10m+1 -(10m-1)";

pub(crate) const C_BLOCK: &str = "
   5   nk nk-4
nk-3    6 nk-2
nk-1 nk-5    7";

pub(crate) const A0P_M7: &str = "
 28  56   .   .   .   .   .   .   .   .   .   .   .   . -84
-57 -26  83   .   .   .   .   .   .   .   .   .   .   .   .
  . -30 -25  55   .   .   .   .   .   .   .   .   .   .   .
  .   . -58 -24  82   .   .   .   .   .   .   .   .   .   .
  .   .   . -31 -23  54   .   .   .   .   .   .   .   .   .
  .   .   .   . -59 -22  81   .   .   .   .   .   .   .   .
  .   .   .   .   . -32 -21  53   .   .   .   .   .   .   .
  .   .   .   .   .   . -60 -20  80   .   .   .   .   .   .
  .   .   .   .   .   .   . -33 -19  52   .   .   .   .   .
  .   .   .   .   .   .   .   . -61 -18  79   .   .   .   .
  .   .   .   .   .   .   .   .   . -34 -17  51   .   .   .
  .   .   .   .   .   .   .   .   .   . -62 -16  78   .   .
  .   .   .   .   .   .   .   .   .   .   . -35 -15  50   .
  .   .   .   .   .   .   .   .   .   .   .   . -63  27  36
 29   .   .   .   .   .   .   .   .   .   .   .   . -77  48";

pub(crate) const A1_CASE_C: &str = "
       1    10m-4 -(10m-3)        .        .        .        .        .        .        .        .        .        .
    6m-5        2        .  -(6m-3)        .        .        .        .        .        .        .        .        .
 -(6m-4)        .        .  -(6m+7)    12m+3        .        .        .        .        .        .        .        .
       . -(10m-2)    10m+4        .        .       -6        .        .        .        .        .        .        .
       .        .       -7        .        .    10m+1 -(10m-6)        .        .        .        .        .        .
       .        .        .    12m+4  -(6m+5)        .        .  -(6m-1)        .        .        .        .        .
       .        .        .        .  -(6m-2)        .        .  -(6m+3)    12m+1        .        .        .        .
       .        .        .        .        . -(10m-5)       -5        .        .      10m        .        .        .
       .        .        .        .        .        .    10m-1        .        . -(10m+3)        4        .        .
       .        .        .        .        .        .        .    12m+2      -6m        .        .  -(6m+2)        .
       .        .        .        .        .        .        .        .  -(6m+1)        .        .  -(6m+4)    12m+5
       .        .        .        .        .        .        .        .        .        3    10m+2        . -(10m+5)
       .        .        .        .        .        .        .        .        .        . -(10m+6)    12m+6      -2m";

pub(crate) const A2_BLOCK: &str = "
      -8     nk-2 -(nk-10)
 -(nk-9)       -9       nk
    nk-1 -(nk-11)      -10";

pub(crate) const A3_BLOCK: &str = "
  11 nk-3 nk-7
nk-6   12 nk-5
nk-4 nk-8   13";

pub(crate) const H17_5: &str = "
 85 -27   .  11   .   .   .  50   .   H   H   .   .   .   .   .  52
 68  84 -28   .  12   .   .   .  35   .   H   H   .   .   .   .   .
  .  67  83 -29   .  13   .   .   .   .   .   H   H   .   .  37   .
  .   .  66  82 -30   .  14   .   .   .  39   .   H   H   .   .   .
  .   .   .  65  81 -31   .  15   .   .   .  41   .   H   H   .   .
  .   .   .   .  64  80 -32   .   .   .   .   .  43   .   H  16   H
  .   .   .   .   .  63  79 -33   .  17   .   .   .  45   .   H   H
  H   H   .   .   .   .  62  78   . -34  18   .   .   .  47   .   .
-20   H   H   .   .   .   .  61  60   .   .  21   .   .   .  49   .
  .   .   H   H   .   .   .   .  77  59 -19   .   3   .   .   .  51
 36   .   .   H   H   .   .   .   .  76  58 -22   .  23   .   .   .
  .  38   .   .   H   H   .   .   .   .  75  57  -4   .   5   .   .
  .   .  40   .   .   H   H   .  25   .   .  74  56 -24   .   .   .
  .   .   .  42   .   .   H   H   .   .   .   .  73  55  -6   .   7
  2   .   .   .  44   .   .   H   H   .   .   .   .  72  54  -1   .
  .   9   .   .   .  46   .   .   H  53   .   .   .   .  71   H  -8
  H   .  10   .   .   .  48   . -26   H   .   .   .   .   .  70  69";

pub(crate) const H18_5: &str = "
  2   .   .   .   .  51  20 -38 -35   .   .   .   .   .   .   .   .   .
-40   4   .   .   .   .  53  19 -36   .   .   .   .   .   .   .   .   .
-42 -28   6   .   .   .   .  37  27   .   .   .   .   .   .   .   .   .
 39 -44 -29   8   .   .   .   .  26   .   .   .   .   .   .   .   .   .
 41  25 -46 -30  10   .   .   .   .   .   .   .   .   .   .   .   .   .
  .  43  24 -48 -31  12   .   .   .   .   .   .   .   .   .   .   .   .
  .   .  45  23 -50 -32  14   .   .   .   .   .   .   .   .   .   .   .
  .   .   .  47  22 -52 -33  16   .   .   .   .   .   .   .   .   .   .
  .   .   .   .  49  21 -54 -34  18   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   1  81   K   H  69 -60   K  90   H
  .   .   .   .   .   .   .   .   .   H   3  80   K   H  70 -61   K  89
  .   .   .   .   .   .   .   .   .  88   H   5  79   K   H  71 -62   K
  .   .   .   .   .   .   .   .   .  72  87   H   7  78   K   H   K -63
  .   .   .   .   .   .   .   .   . -55   K  86   H   9  77   K   H  64
  .   .   .   .   .   .   .   .   .   K -56   K  85   H  11  76  65   H
  .   .   .   .   .   .   .   .   .  75  66 -57   K  84   H  13   H   K
  .   .   .   .   .   .   .   .   .   K   H  67 -58   K  83   H  15  74
  .   .   .   .   .   .   .   .   .   H   K   H  68 -59   K  82  73  17";

pub(crate) const A1_M2: &str = "
    1 10k-4   -31 10k-2    37
   39     3   10k   -34 10k-7
  -33    40     5 10k-8 10k-3
10k-1 10k-6    36     7   -35
10k-5   -32 10k-9    38     9";

pub(crate) const A1_M3: &str = "
     1    14k      .      .    -43  14k-7     50
 14k-1      3     51  14k-8      .    -44      .
     .    -45      5  14k-2     55      . 14k-12
     .      .  14k-3      7 14k-11     54    -46
    56      .    -47      .      9 14k-13  14k-4
 14k-6     53      .    -48  14k-9     11      .
   -49 14k-10  14k-5     52      .      .     13";

pub(crate) const H7_3: &str = "
 15 -13  -2   .   .   .   .
-11  14   .  -3   .   .   .
 -4   .  -8  12   .   .   .
  .  -1  10  -9   .   .   .
  .   .   .   .   5  21  17
  .   .   .   .  18   6  19
  .   .   .   .  20  16   7";

pub(crate) const B11: &str = "
 -1  18 -17   .   .   .   .   .
 24  -2   . -22   .   .   .   .
-23   .  -3  26   .   .   .   .
  . -16  20  -4   .   .   .   .
  .   .   .   .  19  -8 -11   .
  .   .   .   .  -9  21   . -12
  .   .   .   . -10   .  25 -15
  .   .   .   .   . -13 -14  27";

pub(crate) const B15: &str = "
  1 -36  35   .   .   .   .   .   .   .   .   .
-34  -3   .  37   .   .   .   .   .   .   .   .
 33   .   . -22 -11   .   .   .   .   .   .   .
  .  39 -21   .   . -18   .   .   .   .   .   .
  .   . -14   .   . -12  26   .   .   .   .   .
  .   .   . -15 -17   .   .  32   .   .   .   .
  .   .   .   .  28   .   . -19  -9   .   .   .
  .   .   .   .   .  30 -10   .   . -20   .   .
  .   .   .   .   .   . -16   .   .  24  -8   .
  .   .   .   .   .   .   . -13  38   .   . -25
  .   .   .   .   .   .   .   . -29   .  31  -2
  .   .   .   .   .   .   .   .   .  -4 -23  27";

pub(crate) const H6_3: &str = "
 -1 -16   .   .   .  17
-11   .  -4   .   .  15
 12   .  -9  -3   .   .
  .  -2   .  10  -8   .
  .   .  13  -7  -6   .
  .  18   .   .  14   5";

pub(crate) const B10: &str = "
  1  22 -23   .   .   .   .
 17   2   . -19   .   .   .
-18   .   .  15   3   .   .
  . -24  14   .   .  10   .
  .   .   9   .   .  11 -20
  .   .   .   4 -16   .  12
  .   .   .   .  13 -21   8";

pub(crate) const B14: &str = "
-34  -1  35   .   .   .   .   .   .   .   .
 -2  24   . -22   .   .   .   .   .   .   .
 36   . -32  -4   .   .   .   .   .   .   .
  . -23  -3  26   .   .   .   .   .   .   .
  .   .   .   . -20  28  -8   .   .   .   .
  .   .   .   .  30  -9 -21   .   .   .   .
  .   .   .   . -10 -19  29   .   .   .   .
  .   .   .   .   .   .   . -11  27 -16   .
  .   .   .   .   .   .   .  25 -12   . -13
  .   .   .   .   .   .   . -14   . -17  31
  .   .   .   .   .   .   .   . -15  33 -18";

pub(crate) const B18: &str = "
  1  21 -22   .   .   .   .   .   .   .   .   .   .   .   .
-36  -4   .  40   .   .   .   .   .   .   .   .   .   .   .
 35   .   . -12 -23   .   .   .   .   .   .   .   .   .   .
  . -17  33   .   . -16   .   .   .   .   .   .   .   .   .
  .   . -11   .   .  42 -31   .   .   .   .   .   .   .   .
  .   .   . -28  41   .   . -13   .   .   .   .   .   .   .
  .   .   .   . -18   .   .  43 -25   .   .   .   .   .   .
  .   .   .   .   . -26  45   .   . -19   .   .   .   .   .
  .   .   .   .   .   . -14   .   .  34 -20   .   .   .   .
  .   .   .   .   .   .   . -30  -2   .   .  32   .   .   .
  .   .   .   .   .   .   .   .  27   . -24  -3   .   .   .
  .   .   .   .   .   .   .   .   . -15  44 -29   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .  -8  46 -38
  .   .   .   .   .   .   .   .   .   .   .   . -39  -9  48
  .   .   .   .   .   .   .   .   .   .   .   .  47 -37 -10";

pub(crate) const B22: &str = "
  1 -36  35   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
-30  -4   .  34   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
 29   .   .  -3 -26   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .  40  -2   .   . -38   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   . -33   .   .  54 -21   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   . -31  48   .   . -17   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   . -22   .   .  42 -20   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   . -16  53   .   . -37   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   . -32   .   . -15  47   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   . -25  39   .   . -14   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   . -19   .   . -27  46   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .  52 -24   . -28   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   . -23  41 -18   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   . -11  55 -44   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   . -45 -12  57   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .  56 -43 -13   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  -8  58 -50
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -51  -9  60
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  59 -49 -10";

pub(crate) const B26: &str = "
-64   1  63   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .  65 -16 -49   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
 -3   .   .  53 -50   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  . -66   .  -4   .  70   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   . -47   .   . -22  69   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .  68 -48   . -20   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   . -18   .   .  59 -41   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   . -52   . -10  62   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   . -17   .  51 -34   .   .   .   .   .   .   .   .   .   .   .   .   .
 67   .   .   .   .   .   . -39   . -28   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   . -29  61 -32   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   . -42 -30  72   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .  71 -31 -40   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .  -2  60 -58   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .  23   .  15 -38   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   . -21 -33   .   .  54   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   . -27   .   .  -8  35   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  43  14   .   . -57   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  24   .   .  13 -37   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -46  -9   .   .  55   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -26   .   . -19  45
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  44  12   . -56
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .  25 -36  11";

pub(crate) const H30_3: &str = "
   1  -62   61    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K    H    H
 -77    K    H   -3   80    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K    H
   .   83  -12    H    H  -71    .    .    .    .    .    .    .    .    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K
   K  -21    K  -60    H    H   81    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    H  -49    K    K   75    H  -26    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    H   63    K   -4    K    H  -59    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    H  -22    K  -57    K   79    H    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .  -58    H    K    K  -20   78    H    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    K  -24   74    K    H  -50    H    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    H  -48    H    K  -34   82    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    H    K  -38    H  -35   73    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
  76    .    .    .    .    .    .    .    H  -40    K    K  -36    H    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    K   84  -47  -37    H    H    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    K    H    H    2   70  -72    K    .    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    K    H  -27  -19    H   46    K    .    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    K   25    H   39    H  -64    K    .    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    K  -51    H  -18    H   69    K    .    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    K   33    H    8    H  -41    K    .    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K  -28    H  -17    H   45    K    .    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K   56    H    9    H  -65    K    .    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K  -52    H  -16    H   68    K    .    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K   32    H   10    H  -42    K    .    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K  -29    H  -15    H   44    K    .    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K   55    H   11    H  -66    K    .    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K  -53    H  -14    H   67    K    .    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K   31    H   23  -54    H    K    .
   .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K  -30   43  -13    H    H    K
   K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K    H    H    5   kn kn-4
   H    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K    H kn-3    6 kn-2
   H    H    K    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    .    K kn-1 kn-5    7";

pub(crate) const H9_5: &str = "
 45  36  20   .   .   .   . -18   8
-16  24  43  34   .   .   .   .   6
  .  44  35  22   7   . -17   .   .
  .   .   5  42 -15  33   .  26   .
  9   .   . -10  32  41  19   .   .
  .   1   .   .  40  -2  21  31   .
  .   . -12   .   .  23  30  39  11
 25   .   .   3   .  -4  38   .  29
 28 -14   .   .  27   .   .  13  37";

pub(crate) const H6_5: &str = "
  1   2   3   . -25  19
  5   6  16   4   .  30
 23   7   9   8  14   .
 11   .  15  12  10  13
  .  24  18  17  29 -27
 21  22   .  20 -28  26";

pub(crate) const H13_9: &str = "
 65 -21   H   9   .  38   .   K   K   .   .   H  40
 52  64 -22   H  10   .  27   .   K   K   .   .   H
  H  51  63 -23   H  10   .  27   .   K   K  29   .
  .   .  50  62 -24   H   H   .  31   .   K  12   K
  .   H   H  49  61 -25   .  13   .  33   .   K   K
  K   K   .   H  48  60   H -26  14   .  35   .   .
-16   K   K   .   .  47  46   H   H  17   .  37   .
  .   .   K   K   .   H  59  45 -15   H   3   .  39
 28   H   .   K   K   .  19  58  44 -18   H   .   .
  .  30   .   .   K   K   .   H  57  43  -4   H   5
  2   .  32   .   .   K   K   .   H  56  42  -1   H
  .   7   .  34   H   .   K  41   .   H  55   K  -6
  H   .   8   .  36   . -20   K   .   .   H  54  53";
