//! Reference expansions in tensor-component notation.

/// Quartic invariant of the binary cubic.
pub const I4_23: &str = "\
    2 S_{111}^2 S_{222}^2 - 12 S_{111} S_{112} S_{122} S_{222} + 8 S_{111} S_{122}^3 \
    + 8 S_{112}^3 S_{222} - 6 S_{112}^2 S_{122}^2";

/// Quadratic invariant of the binary quartic.
pub const I2_24: &str = "\
    2 S_{1111} S_{2222} - 8 S_{1112} S_{1222} + 6 S_{1122}^2";

/// Cubic invariant of the binary quartic.
pub const I3_24: &str = "\
    6 S_{1111} S_{1122} S_{2222} - 6 S_{1111} S_{1222}^2 - 6 S_{1112}^2 S_{2222} \
    + 12 S_{1112} S_{1122} S_{1222} - 6 S_{1122}^3";

/// Discriminant of the binary quartic, I₂³ − 6I₃².
pub const D24: &str = "\
    8 S_{1111}^3 S_{2222}^3 - 96 S_{1111}^2 S_{1112} S_{1222} S_{2222}^2 \
    - 144 S_{1111}^2 S_{1122}^2 S_{2222}^2 + 432 S_{1111}^2 S_{1122} S_{1222}^2 S_{2222} \
    - 216 S_{1111}^2 S_{1222}^4 + 432 S_{1111} S_{1112}^2 S_{1122} S_{2222}^2 \
    - 48 S_{1111} S_{1112}^2 S_{1222}^2 S_{2222} \
    - 1440 S_{1111} S_{1112} S_{1122}^2 S_{1222} S_{2222} + 648 S_{1111} S_{1122}^4 S_{2222} \
    + 864 S_{1111} S_{1112} S_{1122} S_{1222}^3 + 864 S_{1112}^3 S_{1122} S_{1222} S_{2222} \
    + 288 S_{1112}^2 S_{1122}^2 S_{1222}^2 - 432 S_{1111} S_{1122}^3 S_{1222}^2 \
    - 216 S_{1112}^4 S_{2222}^2 - 512 S_{1112}^3 S_{1222}^3 \
    - 432 S_{1112}^2 S_{1122}^3 S_{2222}";

/// Quartic invariant of the binary quintic.
pub const I4_25: &str = "\
    2 S_{11111}^2 S_{22222}^2 - 20 S_{11111} S_{11112} S_{12222} S_{22222} \
    + 8 S_{11111} S_{11122} S_{11222} S_{22222} + 32 S_{11111} S_{11122} S_{12222}^2 \
    - 24 S_{11111} S_{11222}^2 S_{12222} + 32 S_{11112}^2 S_{11222} S_{22222} \
    + 18 S_{11112}^2 S_{12222}^2 - 24 S_{11112} S_{11122}^2 S_{22222} \
    - 152 S_{11112} S_{11122} S_{11222} S_{12222} + 96 S_{11112} S_{11222}^3 \
    + 96 S_{11122}^3 S_{12222} - 64 S_{11122}^2 S_{11222}^2";

/// Quartic contraction of the ternary cubic (before the sign convention).
pub const I4_33: &str = "\
    6 S_{123}^4 - 12 S_{122} S_{123}^2 S_{133} + 6 S_{122}^2 S_{133}^2 \
    + 6 S_{113} S_{123} S_{133} S_{222} - 12 S_{113} S_{123}^2 S_{223} \
    - 6 S_{113} S_{122} S_{133} S_{223} + 18 S_{113} S_{122} S_{123} S_{233} \
    - 6 S_{113} S_{122}^2 S_{333} + 6 S_{113}^2 S_{223}^2 - 6 S_{113}^2 S_{222} S_{233} \
    - 6 S_{112} S_{133}^2 S_{222} + 18 S_{112} S_{123} S_{133} S_{223} \
    - 12 S_{112} S_{123}^2 S_{233} - 6 S_{112} S_{122} S_{133} S_{233} \
    + 6 S_{112} S_{122} S_{123} S_{333} - 6 S_{112} S_{113} S_{223} S_{233} \
    + 6 S_{112} S_{113} S_{222} S_{333} + 6 S_{112}^2 S_{233}^2 \
    - 6 S_{112}^2 S_{223} S_{333} - 6 S_{111} S_{133} S_{223}^2 \
    + 6 S_{111} S_{133} S_{222} S_{233} + 6 S_{111} S_{123} S_{223} S_{233} \
    - 6 S_{111} S_{123} S_{222} S_{333} - 6 S_{111} S_{122} S_{233}^2 \
    + 6 S_{111} S_{122} S_{223} S_{333}";

/// Sextic invariant of the ternary cubic.
pub const I6_33: &str = "\
    48 S_{123}^6 - 144 S_{122} S_{123}^4 S_{133} + 144 S_{122}^2 S_{123}^2 S_{133}^2 \
    - 48 S_{122}^3 S_{133}^3 + 72 S_{113} S_{123}^3 S_{133} S_{222} \
    - 144 S_{113} S_{123}^4 S_{223} - 72 S_{113} S_{122} S_{123} S_{133}^2 S_{222} \
    + 72 S_{113} S_{122} S_{123}^2 S_{133} S_{223} + 216 S_{113} S_{122} S_{123}^3 S_{233} \
    + 72 S_{113} S_{122}^2 S_{133}^2 S_{223} - 216 S_{113} S_{122}^2 S_{123} S_{133} S_{233} \
    - 72 S_{113} S_{122}^2 S_{123}^2 S_{333} + 72 S_{113} S_{122}^3 S_{133} S_{333} \
    + 18 S_{113}^2 S_{133}^2 S_{222}^2 - 72 S_{113}^2 S_{123} S_{133} S_{222} S_{223} \
    + 144 S_{113}^2 S_{123}^2 S_{223}^2 - 72 S_{113}^2 S_{123}^2 S_{222} S_{233} \
    + 72 S_{113}^2 S_{122} S_{133} S_{223}^2 - 36 S_{113}^2 S_{122} S_{133} S_{222} S_{233} \
    - 216 S_{113}^2 S_{122} S_{123} S_{223} S_{233} \
    + 144 S_{113}^2 S_{122} S_{123} S_{222} S_{333} + 162 S_{113}^2 S_{122}^2 S_{233}^2 \
    - 144 S_{113}^2 S_{122}^2 S_{223} S_{333} - 48 S_{113}^3 S_{223}^3 \
    + 72 S_{113}^3 S_{222} S_{223} S_{233} - 24 S_{113}^3 S_{222}^2 S_{333} \
    - 72 S_{112} S_{123}^2 S_{133}^2 S_{222} + 216 S_{112} S_{123}^3 S_{133} S_{223} \
    - 144 S_{112} S_{123}^4 S_{233} + 72 S_{112} S_{122} S_{133}^3 S_{222} \
    - 216 S_{112} S_{122} S_{123} S_{133}^2 S_{223} \
    + 72 S_{112} S_{122} S_{123}^2 S_{133} S_{233} + 72 S_{112} S_{122} S_{123}^3 S_{333} \
    + 72 S_{112} S_{122}^2 S_{133}^2 S_{233} - 72 S_{112} S_{122}^2 S_{123} S_{133} S_{333} \
    - 36 S_{112} S_{113} S_{133}^2 S_{222} S_{223} \
    - 216 S_{112} S_{113} S_{123} S_{133} S_{223}^2 \
    + 360 S_{112} S_{113} S_{123} S_{133} S_{222} S_{233} \
    + 72 S_{112} S_{113} S_{123}^2 S_{223} S_{233} \
    - 216 S_{112} S_{113} S_{123}^2 S_{222} S_{333} \
    + 36 S_{112} S_{113} S_{122} S_{133} S_{223} S_{233} \
    - 108 S_{112} S_{113} S_{122} S_{133} S_{222} S_{333} \
    - 216 S_{112} S_{113} S_{122} S_{123} S_{233}^2 \
    + 360 S_{112} S_{113} S_{122} S_{123} S_{223} S_{333} \
    - 36 S_{112} S_{113} S_{122}^2 S_{233} S_{333} + 72 S_{112} S_{113}^2 S_{223}^2 S_{233} \
    - 144 S_{112} S_{113}^2 S_{222} S_{233}^2 + 72 S_{112} S_{113}^2 S_{222} S_{223} S_{333} \
    + 162 S_{112}^2 S_{133}^2 S_{223}^2 - 144 S_{112}^2 S_{133}^2 S_{222} S_{233} \
    - 216 S_{112}^2 S_{123} S_{133} S_{223} S_{233} \
    + 144 S_{112}^2 S_{123} S_{133} S_{222} S_{333} + 144 S_{112}^2 S_{123}^2 S_{233}^2 \
    - 72 S_{112}^2 S_{123}^2 S_{223} S_{333} + 72 S_{112}^2 S_{122} S_{133} S_{233}^2 \
    - 36 S_{112}^2 S_{122} S_{133} S_{223} S_{333} \
    - 72 S_{112}^2 S_{122} S_{123} S_{233} S_{333} + 18 S_{112}^2 S_{122}^2 S_{333}^2 \
    + 72 S_{112}^2 S_{113} S_{223} S_{233}^2 - 144 S_{112}^2 S_{113} S_{223}^2 S_{333} \
    + 72 S_{112}^2 S_{113} S_{222} S_{233} S_{333} - 48 S_{112}^3 S_{233}^3 \
    + 72 S_{112}^3 S_{223} S_{233} S_{333} - 24 S_{112}^3 S_{222} S_{333}^2 \
    - 24 S_{111} S_{133}^3 S_{222}^2 + 144 S_{111} S_{123} S_{133}^2 S_{222} S_{223} \
    - 72 S_{111} S_{123}^2 S_{133} S_{223}^2 - 216 S_{111} S_{123}^2 S_{133} S_{222} S_{233} \
    + 72 S_{111} S_{123}^3 S_{223} S_{233} + 120 S_{111} S_{123}^3 S_{222} S_{333} \
    - 144 S_{111} S_{122} S_{133}^2 S_{223}^2 + 72 S_{111} S_{122} S_{133}^2 S_{222} S_{233} \
    + 360 S_{111} S_{122} S_{123} S_{133} S_{223} S_{233} \
    - 72 S_{111} S_{122} S_{123} S_{133} S_{222} S_{333} \
    - 72 S_{111} S_{122} S_{123}^2 S_{233}^2 - 216 S_{111} S_{122} S_{123}^2 S_{223} S_{333} \
    - 144 S_{111} S_{122}^2 S_{133} S_{233}^2 + 72 S_{111} S_{122}^2 S_{133} S_{223} S_{333} \
    + 144 S_{111} S_{122}^2 S_{123} S_{233} S_{333} - 24 S_{111} S_{122}^3 S_{333}^2 \
    + 72 S_{111} S_{113} S_{133} S_{223}^3 \
    - 108 S_{111} S_{113} S_{133} S_{222} S_{223} S_{233} \
    + 36 S_{111} S_{113} S_{133} S_{222}^2 S_{333} \
    - 72 S_{111} S_{113} S_{123} S_{223}^2 S_{233} \
    + 144 S_{111} S_{113} S_{123} S_{222} S_{233}^2 \
    - 72 S_{111} S_{113} S_{123} S_{222} S_{223} S_{333} \
    - 36 S_{111} S_{113} S_{122} S_{223} S_{233}^2 \
    + 72 S_{111} S_{113} S_{122} S_{223}^2 S_{333} \
    - 36 S_{111} S_{113} S_{122} S_{222} S_{233} S_{333} \
    - 36 S_{111} S_{112} S_{133} S_{223}^2 S_{233} \
    + 72 S_{111} S_{112} S_{133} S_{222} S_{233}^2 \
    - 36 S_{111} S_{112} S_{133} S_{222} S_{223} S_{333} \
    - 72 S_{111} S_{112} S_{123} S_{223} S_{233}^2 \
    + 144 S_{111} S_{112} S_{123} S_{223}^2 S_{333} \
    - 72 S_{111} S_{112} S_{123} S_{222} S_{233} S_{333} \
    + 72 S_{111} S_{112} S_{122} S_{233}^3 \
    - 108 S_{111} S_{112} S_{122} S_{223} S_{233} S_{333} \
    + 36 S_{111} S_{112} S_{122} S_{222} S_{333}^2 + 18 S_{111}^2 S_{223}^2 S_{233}^2 \
    - 24 S_{111}^2 S_{223}^3 S_{333} - 24 S_{111}^2 S_{222} S_{233}^3 \
    + 36 S_{111}^2 S_{222} S_{223} S_{233} S_{333} - 6 S_{111}^2 S_{222}^2 S_{333}^2";
