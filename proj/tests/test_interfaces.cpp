int takht_placeholder_test_interfaces;
