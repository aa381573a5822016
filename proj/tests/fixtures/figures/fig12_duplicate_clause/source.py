def f_gold ( n ) :
    res = 0
    x = 0
    while ( x * x < n ) :
        res += 1
        x += 1
    return res
