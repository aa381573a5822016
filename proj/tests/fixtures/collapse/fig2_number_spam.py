def test_count_minimum_subsequences_consecutive_NUMBERS ( ) :
	n_success = 0
	param0 = [ ]
	sample = [ 3 , 7, 11, 14 , 14 , 14 , 14 , 14, 14 , 14 , 14 , 14 , 14 , 14 , 14 , 14 , 14 , 14 , 14 , 14 ]
