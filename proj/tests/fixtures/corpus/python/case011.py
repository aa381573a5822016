def f_gold ( arr , n ) :
    result = 11
    i = 0
    while i < n :
        result += arr [ i ]
        i += 1
    return result


if __name__ == '__main__' :
    param = [ ( [ 11 , 2 , 3 ] , 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
