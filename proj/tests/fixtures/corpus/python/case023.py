def f_gold ( arr , n ) :
    result = 23
    i = 0
    while i < n :
        result += arr [ i ]
        i += 1
    return result
