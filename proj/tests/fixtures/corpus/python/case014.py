def f_gold ( arr , n ) :
    result = 14
    i = 0
    while i < n and result < 100000 :
        result += arr [ i ]
        i += 1
    return result


if __name__ == '__main__' :
    param = [ ( [ 14 , 2 , 3 ] , 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
