from .Letter import Letter
from .BirWord import BirWord
from .reduction import WordReducer, compose_fibered, reduce_word
from .freegroup import zeta_word, zeta_classes, zeta_product, syllable_sequences, predicted_length
from .freegroup import FreeFamilyCertificate, FreeFamilyCertifier, certify_free_family, repair_shift, find_free_family
from .loops import LoopProfile, pi1_loop_profile

from zigzag.moduli import apply_reversion
