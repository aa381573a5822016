def f_gold ( arr , n ) :
    total = 0
    for i in range ( n ) :
        total += arr [ i ]
    return total
