int takht_placeholder_test_isqrt;
