def f_gold ( arr , n ) :
    result = 1
    i = 0
    j = n - 1
    while i < j :
        result += arr [ i ] - j
        i += 1
        j -= 1
    return result
