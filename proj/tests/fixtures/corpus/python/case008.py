def f_gold ( arr1 , arr2 , n ) :
    result = 8
    i = 0
    while i < n and result < 100000 :
        result += arr1 [ i ] + arr2 [ i ]
        i += 1
    return result
