def f_gold ( x ) :
    temp = x
    n = 0
    sm = 0
    while ( x != 0 ) :
        n = x % 10
        sm = sm * 10 + n
        x = x // 10
    return ( sm == temp )
