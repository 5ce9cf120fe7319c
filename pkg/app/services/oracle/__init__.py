from .brute import brute_chi_rel, brute_chromatic, brute_switch_equiv

__all__ = ["brute_chi_rel", "brute_chromatic", "brute_switch_equiv"]
