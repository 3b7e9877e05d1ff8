"""4-adic complexity of quaternary cyclotomic sequences of period 2p."""

from quatadic.numtheory import (
    NotInvertibleError,
    NotOddPrimeError,
    OddPrimeParam,
    crt_lift,
    is_prime,
    legendre_symbol,
    mod_inverse,
    multiplicative_order,
    primitive_root_mod_2p,
)
from quatadic.sequence import (
    CyclotomicPartition,
    QuaternarySequence,
    SequenceFormatError,
    build_partition,
    generate_sequence,
    sequence_from_text,
    sequence_to_text,
)
from quatadic.adic import (
    ComplexityResult,
    RingElement,
    VerificationRecord,
    adic_complexity,
    check_lemma2_part1,
    check_lemma2_part2,
    gauss_sum,
    lemma2_rhs,
    predict_d,
    s_a,
    split_gcd,
    verify_theorem,
)

__version__ = "0.1.0"
